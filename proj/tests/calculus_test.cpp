#include "aware/calculus.hpp"

#include <gtest/gtest.h>

#include "aware/error.hpp"
#include "aware/generators.hpp"
#include "aware/known_results.hpp"
#include "aware/semantics.hpp"
#include "support.hpp"

namespace aware {
namespace {

TEST(Tautology, Examples) {
  EXPECT_TRUE(is_tautology_instance(parse("(U_1 p -> false) <-> A_1 p")));
  EXPECT_TRUE(is_tautology_instance(parse("K_1 p | ~K_1 p")));
  EXPECT_TRUE(is_tautology_instance(parse("(forall p. A_1 p) -> (forall p. A_1 p)")));
  EXPECT_FALSE(is_tautology_instance(parse("K_1 p -> p")));
  EXPECT_FALSE(is_tautology_instance(parse("A_1 p -> A_1 ~p")));
  // Distinct modal atoms stay distinct.
  EXPECT_FALSE(is_tautology_instance(parse("K_1 p -> K_2 p")));
}

TEST(Tautology, Cap) {
  std::string text = "p0";
  for (int i = 1; i <= 20; ++i) text += " | p" + std::to_string(i);
  EXPECT_THROW(is_tautology_instance(parse(text + " | ~p0")), CapExceeded);
}

TEST(MatchAxiom, Examples) {
  const auto kk = match_axiom(parse("K_2 (p -> q & r) -> (K_2 p -> K_2 (q & r))"), "K-K");
  ASSERT_TRUE(kk);
  EXPECT_EQ(kk->agents.at("i"), "2");
  EXPECT_EQ(render(kk->formulas.at("psi")), "q & r");
  EXPECT_EQ(instantiate_axiom("K-K", *kk), parse("K_2 (p -> q & r) -> (K_2 p -> K_2 (q & r))"));
  EXPECT_TRUE(match_axiom(parse("A_1 A_2 p -> A_1 ~A_2 p"), "A-Neg"));
  EXPECT_FALSE(match_axiom(parse("K_1 (p -> q) -> (K_2 p -> K_1 q)"), "K-K"));
  EXPECT_FALSE(match_axiom(parse("A_1 p & A_1 q -> A_1 (q & p)"), "A-M"));
  EXPECT_TRUE(match_axiom(parse("A_3 true"), "A-N"));
  EXPECT_THROW(axiom_pattern("K-5"), Error);
}

TEST(MatchAxiom, InstancesRoundTrip) {
  Rng rng(31);
  for (int round = 0; round < 500; ++round) {
    for (const auto& name : axiom_names(Calculus::kDlr)) {
      if (name == "PL") continue;
      Substitution s;
      s.formulas["phi"] = testing::random_formula(rng, 3);
      s.formulas["psi"] = testing::random_formula(rng, 3);
      s.agents["i"] = below(rng, 2) ? "1" : "2";
      const Formula inst = instantiate_axiom(name, s);
      const auto back = match_axiom(inst, name);
      ASSERT_TRUE(back) << name << ": " << render(inst);
      ASSERT_EQ(instantiate_axiom(name, *back), inst);
    }
  }
}

TEST(Proof, NotKnowsUnawareIsAccepted) {
  const Proof proof = parse_proof(not_knows_unaware_proof());
  EXPECT_EQ(proof.calculus, Calculus::kDlr);
  ASSERT_EQ(proof.lines.size(), 7u);
  EXPECT_EQ(proof.lines.back().formula, parse("~K_1 U_1 p"));
  const ProofVerdict v = check_proof(proof);
  EXPECT_TRUE(v.accepted) << v.reason;
  EXPECT_EQ(check_proof(parse_proof(render_proof(proof))).accepted, true);
  EXPECT_EQ(render_proof(parse_proof(render_proof(proof))), render_proof(proof));
}

TEST(Proof, EverySingleIndexPerturbationIsRejected) {
  const Proof proof = parse_proof(not_knows_unaware_proof());
  int perturbations = 0;
  for (std::size_t l = 0; l < proof.lines.size(); ++l) {
    if (proof.lines[l].justification.kind != Justification::Kind::kMP) continue;
    for (int which = 0; which < 2; ++which) {
      for (std::size_t value = 0; value <= proof.lines.size() + 1; ++value) {
        Proof bad = proof;
        std::size_t& slot = which == 0 ? bad.lines[l].justification.first : bad.lines[l].justification.second;
        if (slot == value) continue;
        slot = value;
        ++perturbations;
        const ProofVerdict v = check_proof(bad);
        EXPECT_FALSE(v.accepted) << "line " << l + 1 << " index " << which << " -> " << value;
        EXPECT_EQ(v.bad_line, l + 1);
        // The text form fails the same way.
        EXPECT_FALSE(check_proof(parse_proof(render_proof(bad))).accepted);
      }
    }
  }
  EXPECT_GT(perturbations, 0);
}

TEST(Proof, OneLineAn) {
  EXPECT_TRUE(check_proof(parse_proof("calculus: base\n1. A_1 true ; ax A-N\n")).accepted);
  EXPECT_TRUE(check_proof(parse_proof("calculus: dlr\n1. A_2 true ; ax A-N i=2\n")).accepted);
  EXPECT_FALSE(check_proof(parse_proof("calculus: base\n1. A_1 true ; ax A-N i=2\n")).accepted);
}

TEST(Proof, Rejections) {
  auto verdict = [](const std::string& text) { return check_proof(parse_proof(text)); };
  // MP on a non-implication.
  ProofVerdict v = verdict("calculus: base\n1. A_1 true ; ax A-N\n2. A_1 true ; mp 1 1\n");
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.bad_line, 2u);
  EXPECT_FALSE(verdict("calculus: base\n1. K_1 p -> p ; pl\n").accepted);
  // P and AU are not axioms of the base calculus.
  EXPECT_FALSE(verdict("calculus: base\n1. U_1 p -> U_1 U_1 p ; ax AU\n").accepted);
  // In dlr, K-RN needs a base theorem.
  EXPECT_FALSE(verdict("calculus: dlr\n1. U_1 p -> U_1 U_1 p ; ax AU\n2. K_1 (U_1 p -> U_1 U_1 p) ; krn 1 1\n").accepted);
  EXPECT_TRUE(verdict("calculus: dlr\n1. p -> p ; pl\n2. K_1 (p -> p) ; krn 1 1\n").accepted);
  EXPECT_TRUE(verdict("calculus: base\n1. p <-> ~~p ; pl\n2. A_1 p <-> A_1 ~~p ; are 1 1\n").accepted);
  EXPECT_FALSE(verdict("calculus: base\n1. p <-> ~~p ; pl\n2. A_1 p <-> A_2 ~~p ; are 1 1\n").accepted);
  EXPECT_FALSE(verdict("calculus: base\n2. p -> p ; pl\n").accepted);
  EXPECT_FALSE(verdict("calculus: base\n1. K_1 p -> p ; ax K-4\n").accepted);
}

TEST(Proof, ParseErrors) {
  EXPECT_THROW(parse_proof("1. p -> p ; pl\n"), ParseError);
  EXPECT_THROW(parse_proof("calculus: s5\n"), ParseError);
  EXPECT_THROW(parse_proof("calculus: base\n1. p -> ; pl\n"), ParseError);
  EXPECT_THROW(parse_proof("calculus: base\n1. p -> p ; mp x 2\n"), ParseError);
  try {
    parse_proof("calculus: base\n1. p -> p ; pl\n2. p ; frobnicate\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Proof, PrefixesOfAcceptedProofsAreAccepted) {
  const Proof proof = parse_proof(not_knows_unaware_proof());
  for (std::size_t n = 1; n <= proof.lines.size(); ++n) {
    Proof prefix = proof;
    prefix.lines.resize(n);
    EXPECT_TRUE(check_proof(prefix).accepted) << n;
  }
}

// Soundness of the base calculus on partitional models.
TEST(Soundness, AxiomsAreValidOnRandomPartitionalModels) {
  Rng rng(32);
  testing::FormulaShape shape;
  shape.letters = {"p", "q"};
  shape.quantifiers = false;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + below(rng, 4);
    const PartitionalModel m = random_partitional_model(rng, n, {"1", "2"});
    for (const auto& name : axiom_names(Calculus::kBase)) {
      if (name == "PL") continue;
      Substitution s;
      s.formulas["phi"] = testing::random_formula(rng, 2, shape);
      s.formulas["psi"] = testing::random_formula(rng, 2, shape);
      s.agents["i"] = below(rng, 2) ? "1" : "2";
      ASSERT_TRUE(valid_on(m, instantiate_axiom(name, s))) << name;
    }
  }
}

TEST(Soundness, RulesPreserveValidity) {
  Rng rng(33);
  testing::FormulaShape shape;
  shape.letters = {"p"};
  shape.agents = {"1"};
  shape.quantifiers = false;
  int premises = 0;
  for (int round = 0; round < 1500; ++round) {
    const std::size_t n = 1 + below(rng, 3);
    const PartitionalModel m = random_partitional_model(rng, n, {"1"});
    const Formula f = testing::random_formula(rng, 3, shape);
    const Formula g = testing::random_formula(rng, 3, shape);
    if (valid_on(m, f)) {
      ++premises;
      ASSERT_TRUE(valid_on(m, Formula::knows("1", f))) << render(f);
      if (valid_on(m, Formula::implication(f, g))) {
        ASSERT_TRUE(valid_on(m, g));
      }
    }
    const Formula iff = Formula::biconditional(f, g);
    if (valid_on(m, iff)) {
      ASSERT_TRUE(valid_on(m, Formula::biconditional(Formula::aware("1", f), Formula::aware("1", g))));
    }
  }
  EXPECT_GT(premises, 0);
}

}  // namespace
}  // namespace aware
