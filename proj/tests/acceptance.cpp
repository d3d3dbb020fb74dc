// Runs each acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aware/analysis.hpp"
#include "aware/calculus.hpp"
#include "aware/decision.hpp"
#include "aware/dlr_model.hpp"
#include "aware/generators.hpp"
#include "aware/known_results.hpp"
#include "aware/semantics.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace aware {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

const char* const kDlrThree[] = {"Plausibility", "KU-Introspection", "AU-Introspection"};

void dlr3_theorem(Outcome& out) {
  const StandardModel m = builtin_dlr3();
  const StateSpace& sp = m.space();
  const std::size_t alpha = sp.index_of("alpha");
  for (const char* s : {"Necessitation", "Monotonicity", "Distribution", "AntiNecessitation", "Reflexivity",
                        "PositiveIntrospection", "WeakNecessitation"}) {
    out.require(schema_check(m, s), std::string(s) + " not valid on M_DLR3");
  }
  for (const char* s : kDlrThree) out.require(schema_check(m, s, alpha), std::string(s) + " fails at alpha");
  for (int n = 1; n <= 5; ++n) {
    out.require(schema_check(m, "nPlausibility", alpha, n), "nPlausibility(" + std::to_string(n) + ") fails at alpha");
  }
  out.require(!has(m.awareness(0, sp.event_of({"alpha", "w1"}).bits()), alpha), "alpha aware of {alpha w1}");
  out.require(has(m.knowledge(0, sp.all_bits()), alpha), "alpha not in k(Omega)");
  out.require(has(m.awareness(0, sp.all_bits()), alpha), "alpha not in a(Omega)");
  out.detail = "M_DLR3 verdicts as published";
}

std::string table_text(const OperatorTable& t) {
  std::string out;
  for (Mask x : t) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "(" + out + ")";
}

void two_state_exhaustive(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  const StateSpace sp = StateSpace::numbered(2);
  const Formula ap = parse("A_1 p");
  const Formula kp_aq = parse("K_1 p -> A_1 q");
  const Formula ap_aq = parse("A_1 p <-> A_1 q");
  int premises = 0;
  // Necessitation, Monotonicity, Weak Necessitation (K p -> A q), Weak Necessitation (A p <-> A q).
  int violations[4] = {0, 0, 0, 0};
  std::string first;
  for (unsigned kc = 0; kc < 256; ++kc) {
    OperatorTable k(4);
    for (unsigned e = 0; e < 4; ++e) k[e] = (kc >> (2 * e)) & 3;
    for (unsigned ac = 0; ac < 256; ++ac) {
      OperatorTable a(4);
      for (unsigned e = 0; e < 4; ++e) a[e] = (ac >> (2 * e)) & 3;
      const StandardModel m(sp, {"1"}, {AgentOperators{k, a}});
      bool dlr = true;
      for (const char* s : kDlrThree) dlr = dlr && schema_check(m, s);
      if (!dlr) continue;
      ++premises;
      const bool bad[4] = {schema_check(m, "Necessitation") && !valid_on(m, ap),
                           schema_check(m, "Monotonicity") && !valid_on(m, kp_aq),
                           schema_check(m, "WeakNecessitation") && !valid_on(m, kp_aq),
                           schema_check(m, "WeakNecessitation") && !valid_on(m, ap_aq)};
      for (int i = 0; i < 4; ++i) {
        if (!bad[i]) continue;
        ++violations[i];
        if (first.empty()) first = "first: k=" + table_text(k) + " a=" + table_text(a);
      }
    }
  }
  const int total = violations[0] + violations[1] + violations[2] + violations[3];
  out.require(total == 0, std::to_string(total) + " violations (Nec " + std::to_string(violations[0]) + ", Mon " +
                              std::to_string(violations[1]) + ", WN K p -> A q " + std::to_string(violations[2]) +
                              ", WN A p <-> A q " + std::to_string(violations[3]) + "; " + first + ")");
  out.require(premises > 0, "no model satisfies the premises");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 30, "took " + std::to_string(secs) + "s");
  if (out.pass) out.detail = "65536 table pairs, " + std::to_string(premises) + " satisfy the DLR axioms, 0 violations";
}

void as_ac_implication(Outcome& out) {
  const Formula ap_aq = parse("A_1 p -> A_1 q");
  int premises = 0;
  int violations = 0;
  auto check = [&](const StandardModel& m) {
    for (std::size_t s = 0; s < m.space().size(); ++s) {
      if (!(schema_check(m, "AS", s) && schema_check(m, "AC", s))) continue;
      ++premises;
      if (!valid_at(m, s, ap_aq)) ++violations;
    }
  };
  const StateSpace two = StateSpace::numbered(2);
  const OperatorTable k{0, 1, 2, 3};
  for (unsigned ac = 0; ac < 256; ++ac) {
    OperatorTable a(4);
    for (unsigned e = 0; e < 4; ++e) a[e] = (ac >> (2 * e)) & 3;
    check(StandardModel(two, {"1"}, {AgentOperators{k, a}}));
  }
  Rng rng(2024);
  for (int round = 0; round < 10000; ++round) {
    const std::size_t n = 1 + below(rng, 4);
    StandardModel m = random_standard_model(rng, n, {"1"});
    if (round % 2 == 1) {
      // Awareness that is mostly Omega makes AS and AC hold more often.
      OperatorTable a = m.operators(0).awareness;
      for (auto& x : a) x = below(rng, 4) == 0 ? x : full_mask(n);
      m = StandardModel(m.space(), {"1"}, {AgentOperators{m.operators(0).knowledge, a}});
    }
    check(m);
  }
  out.require(violations == 0, std::to_string(violations) + " violations");
  out.require(premises > 0, "AS and AC never held");
  if (out.pass) out.detail = "256 tables + 10000 random models, " + std::to_string(premises) + " premise states, 0 violations";
}

void ring4_reproduction(Outcome& out) {
  const PartitionalModel m = builtin_ring4();
  out.require(valid_at(m, 0, parse("K_1 exists p. U_1 p & ~exists p. K_1 U_1 p")), "formula not valid at 1");
  out.require(dlr_report(m, 0, 1).all_hold(), "DLR report fails at 1");
  for (std::size_t s = 0; s < 4; ++s) {
    const std::string at = " at " + m.space().label(s);
    out.require(is_coherent(m, s).coherent, "incoherent" + at);
    out.require(schema_check(m, "A-4ij", s), "A-4ij fails" + at);
    out.require(schema_check(m, "AK-4", s), "AK-4 fails" + at);
  }
  const std::size_t order = automorphisms(m).size();
  out.require(order == 6, "automorphism group has order " + std::to_string(order));
  if (out.pass) out.detail = "valid at 1, DLR at 1, coherent everywhere, |Aut| = 6";
}

void soundness(Outcome& out) {
  Rng rng(5);
  testing::FormulaShape shape;
  shape.letters = {"p", "q"};
  shape.quantifiers = false;
  int failures = 0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + below(rng, 5);
    const std::vector<std::string> agents = below(rng, 2) ? std::vector<std::string>{"1", "2"} : std::vector<std::string>{"1"};
    shape.agents = agents;
    const PartitionalModel m = random_partitional_model(rng, n, agents);
    for (const auto& name : axiom_names(Calculus::kBase)) {
      if (name == "PL") continue;
      Substitution s;
      s.formulas["phi"] = testing::random_formula(rng, 2, shape);
      s.formulas["psi"] = testing::random_formula(rng, 2, shape);
      s.agents["i"] = agents[below(rng, agents.size())];
      if (!valid_on(m, instantiate_axiom(name, s))) ++failures;
    }
    const Formula f = testing::random_formula(rng, 3, shape);
    const Formula g = testing::random_formula(rng, 3, shape);
    if (valid_on(m, f)) {
      if (!valid_on(m, Formula::knows(agents[0], f))) ++failures;
      if (valid_on(m, Formula::implication(f, g)) && !valid_on(m, g)) ++failures;
    }
    if (valid_on(m, Formula::biconditional(f, g)) &&
        !valid_on(m, Formula::biconditional(Formula::aware(agents[0], f), Formula::aware(agents[0], g)))) {
      ++failures;
    }
  }
  out.require(failures == 0, std::to_string(failures) + " soundness violations");
  SearchOptions options;
  options.max_states = 4;
  for (const char* text : {"A_1 p -> K_1 p", "A_1 p -> A_1 q"}) {
    const Formula f = parse(text);
    const auto c = countermodel_search(f, options, 1);
    out.require(c && !evaluate(c->model, c->valuation, f).contains(c->state), std::string("no countermodel to ") + text);
  }
  if (out.pass) out.detail = "1000 random partitional models, 0 violations; both countermodels found";
}

void proof_checker(Outcome& out) {
  const Proof proof = parse_proof(not_knows_unaware_proof());
  const ProofVerdict v = check_proof(proof);
  out.require(v.accepted, "derivation rejected: " + v.reason);
  int perturbed = 0;
  for (std::size_t l = 0; l < proof.lines.size(); ++l) {
    const Justification& j = proof.lines[l].justification;
    const bool two = j.kind == Justification::Kind::kMP;
    if (j.kind == Justification::Kind::kAxiom || j.kind == Justification::Kind::kPL) continue;
    for (int which = 0; which < (two ? 2 : 1); ++which) {
      for (std::size_t value = 0; value <= proof.lines.size() + 1; ++value) {
        Proof bad = proof;
        std::size_t& slot = which == 0 ? bad.lines[l].justification.first : bad.lines[l].justification.second;
        if (slot == value) continue;
        slot = value;
        ++perturbed;
        out.require(!check_proof(bad).accepted, "perturbation accepted at line " + std::to_string(l + 1));
      }
    }
  }
  out.require(check_proof(parse_proof("calculus: base\n1. A_1 true ; ax A-N\n")).accepted, "A-N rejected");
  if (out.pass) out.detail = "derivation accepted, " + std::to_string(perturbed) + " perturbations rejected, A-N accepted";
}

void extension_construction(Outcome& out) {
  const StandardModel dlr = builtin_dlr3();
  const StateSpace& sp = dlr.space();
  const std::size_t alpha = sp.index_of("alpha");
  const KnowledgeModel km = knowledge_part(dlr, "1");
  const Event e = sp.event_of({"alpha", "w1"});
  auto dlr_at = [&](const StandardModel& m, std::size_t at, const Event& ev, int n) {
    bool ok = !has(m.awareness(0, ev.bits()), at);
    for (const char* s : kDlrThree) ok = ok && schema_check(m, s, at);
    for (int j = 1; j <= n; ++j) ok = ok && schema_check(m, "nPlausibility", at, j);
    return ok;
  };
  const auto ext = extend_to_dlr(km, alpha, e);
  out.require(ext && dlr_at(ext->model, alpha, e, 5), "extension of M_DLR3 fails");
  const auto ck = extend_to_dlr_ck(km, alpha, e);
  bool ck_ok = ck && dlr_at(ck->model, alpha, e, 1);
  for (const char* s : {"CK-Plausibility", "CK-KU-Introspection", "CK-AU-Introspection"}) {
    ck_ok = ck_ok && schema_check(ck->model, s, alpha);
  }
  out.require(ck_ok, "CK extension of M_DLR3 fails");
  for (const Relation& r : {Relation::identity(2), Relation::all(2)}) {
    const KnowledgeModel s5 = KnowledgeModel::from_relation(StateSpace::numbered(2), r);
    for (std::size_t a = 0; a < 2; ++a) {
      for (Mask x = 0; x < 4; ++x) {
        if (has(s5.knowledge(x), a)) continue;
        const Event ev = s5.space().event(x);
        out.require(!extend_to_dlr(s5, a, ev) && !extend_to_dlr_ck(s5, a, ev), "2-state S5 model extended");
      }
    }
  }
  // n-Plausibility variants on a 5-chain and on random preorders.
  const Relation chain = Relation::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}).reflexive_transitive_closure();
  std::vector<KnowledgeModel> models{KnowledgeModel::from_relation(StateSpace::numbered(5), chain)};
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + below(rng, 4);
    models.push_back(KnowledgeModel::from_relation(StateSpace::numbered(n), random_preorder(rng, n, 40)));
  }
  int built = 0;
  for (const KnowledgeModel& m : models) {
    for (int n = 1; n <= 3; ++n) {
      for (Mask x = 0; x <= m.space().all_bits(); ++x) {
        const Event ev = m.space().event(x);
        const auto out_n = extend_to_dlr(m, 0, ev, n);
        if (!out_n) continue;
        ++built;
        out.require(dlr_at(out_n->model, 0, ev, n), "n-variant output fails its schemas");
      }
    }
  }
  out.require(built > 0, "no n-variant extension built");
  if (out.pass) out.detail = "M_DLR3 extended (plain and CK), S5 sweep empty, " + std::to_string(built) + " n-variants checked";
}

void trade_reproduction(Outcome& out) {
  const ChoiceScenario sc = trade5_scenario();
  const std::vector<Rational> alice{Rational(13) / 3, 5, 7, 5, Rational(13) / 3};
  for (std::size_t s = 0; s < 5; ++s) {
    const std::string at = " at " + std::to_string(s + 1);
    out.require(conditional_eu(sc, "f", sc.information("A", s)) == alice[s], "Alice EU(f)" + at);
    out.require(conditional_eu(sc, "f", sc.information("B", s)) == Rational(19) / 5, "Bob EU(f)" + at);
    out.require(conditional_eu(sc, "g", sc.information("A", s)) == 4, "Alice EU(g)" + at);
    out.require(conditional_eu(sc, "g", sc.information("B", s)) == 4, "Bob EU(g)" + at);
  }
  for (const TradeRow& row : trade_report(sc).rows) {
    out.require(row.trade_possible, "no trade at " + std::to_string(row.state + 1));
  }
  out.require(unawareness_witness(sc.structure(), 0, "A").has_value(), "Alice aware of everything at 1");
  if (out.pass) out.detail = "EU values exact, trade at all 5 states, Alice unaware at 1";
}

void cross_oracle(Outcome& out) {
  Rng rng(9);
  int disagreements = 0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + below(rng, 3);
    const StandardModel m = below(rng, 2) ? random_standard_model(rng, n, {"1", "2"})
                                          : derive_standard(random_partitional_model(rng, n, {"1", "2"}));
    const testing::EventOracle oracle(m);
    const std::size_t state = below(rng, n);
    for (const auto& name : schema_names()) {
      const std::optional<int> param = name == "nPlausibility" ? std::optional<int>(1 + below(rng, 3)) : std::nullopt;
      if (schema_check(m, name, state, param) != oracle.holds(name, state, param)) ++disagreements;
    }
  }
  out.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (out.pass) out.detail = "1000 random models x 18 schemas, 0 disagreements";
}

}  // namespace
}  // namespace aware

int main() {
  using aware::Criterion;
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"1 M_DLR3 counterexample", aware::dlr3_theorem},
      {"2 two-state exhaustive triviality", aware::two_state_exhaustive},
      {"3 AS and AC imply uniform awareness", aware::as_ac_implication},
      {"4 M_RING4 reproduction", aware::ring4_reproduction},
      {"5 soundness and countermodels", aware::soundness},
      {"6 proof checker", aware::proof_checker},
      {"7 DLR extension construction", aware::extension_construction},
      {"8 speculative trade", aware::trade_reproduction},
      {"9 schema checker vs event oracles", aware::cross_oracle},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    aware::Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failed;
    std::printf("%s criterion %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", name, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
