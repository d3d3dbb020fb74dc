#include "aware/known_results.hpp"

#include <functional>

#include "aware/analysis.hpp"
#include "aware/calculus.hpp"
#include "aware/decision.hpp"
#include "aware/formula.hpp"
#include "aware/models.hpp"
#include "aware/semantics.hpp"

namespace aware {

const std::string& not_knows_unaware_proof() {
  static const std::string text =
      "# ~K_1 U_1 p from AU, P and K-T\n"
      "calculus: dlr\n"
      "1. U_1 p -> U_1 U_1 p ; ax AU\n"
      "2. U_1 U_1 p -> ~K_1 U_1 p & ~K_1 ~K_1 U_1 p ; ax P\n"
      "3. K_1 U_1 p -> U_1 p ; ax K-T\n"
      "4. (K_1 U_1 p -> U_1 p) -> ((U_1 p -> U_1 U_1 p) -> ((U_1 U_1 p -> ~K_1 U_1 p & ~K_1 ~K_1 U_1 p) -> "
      "~K_1 U_1 p)) ; pl\n"
      "5. (U_1 p -> U_1 U_1 p) -> ((U_1 U_1 p -> ~K_1 U_1 p & ~K_1 ~K_1 U_1 p) -> ~K_1 U_1 p) ; mp 3 4\n"
      "6. (U_1 U_1 p -> ~K_1 U_1 p & ~K_1 ~K_1 U_1 p) -> ~K_1 U_1 p ; mp 1 5\n"
      "7. ~K_1 U_1 p ; mp 2 6\n";
  return text;
}

namespace {

class Checklist {
 public:
  void check(std::string topic, std::string claim, const std::function<std::string(bool&)>& body) {
    KnownResult r{std::move(topic), std::move(claim), false, ""};
    try {
      r.detail = body(r.holds);
    } catch (const std::exception& e) {
      r.holds = false;
      r.detail = std::string("error: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<KnownResult> take() { return std::move(results_); }

 private:
  std::vector<KnownResult> results_;
};

std::string verdict(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<KnownResult> check_known_results() {
  Checklist c;

  // Syntax.
  c.check("syntax", "Plausibility parses as U_1 p -> (~K_1 p & ~K_1 ~K_1 p)", [](bool& ok) {
    const Formula f = parse("U_1 p -> ~K_1 p & ~K_1 ~K_1 p");
    const Formula p = Formula::letter("p");
    const Formula expected = Formula::implication(
        Formula::unaware("1", p),
        Formula::conjunction(Formula::negation(Formula::knows("1", p)),
                             Formula::negation(Formula::knows("1", Formula::negation(Formula::knows("1", p))))));
    ok = f == expected;
    return render(f);
  });
  c.check("syntax", "the first quantifier in K_1 exists p. U_1 p & ~exists p. K_1 U_1 p scopes under K_1",
          [](bool& ok) {
            const Formula f = parse("K_1 exists p. U_1 p & ~exists p. K_1 U_1 p");
            ok = f.op() == Op::kAnd && f.lhs().op() == Op::kKnow && f.lhs().child().op() == Op::kExists;
            return render(f);
          });
  c.check("syntax", "(~K)^3 p renders as ~K_1 ~K_1 ~K_1 p", [](bool& ok) {
    const std::string s = render(iterated_not_knows("1", Formula::letter("p"), 3));
    ok = s == "~K_1 ~K_1 ~K_1 p";
    return s;
  });

  // Three-state counterexample.
  const StandardModel dlr3 = builtin_dlr3();
  const StateSpace& d = dlr3.space();
  const std::size_t alpha = d.index_of("alpha");
  const Event e = d.event_of({"alpha", "w1"});
  c.check("M_DLR3", "the model has 3 states and every a(F) is Omega or {w2}", [&](bool& ok) {
    ok = d.size() == 3;
    for (const Event& f : d.enumerate_events()) {
      const Event a = awareness_event(dlr3, "1", f);
      ok = ok && (a.is_full() || a == d.event_of({"w2"}));
    }
    return std::to_string(d.size()) + " states";
  });
  c.check("M_DLR3", "a({alpha w1}) = {w2}", [&](bool& ok) {
    const Event a = awareness_event(dlr3, "1", e);
    ok = a == d.event_of({"w2"});
    return d.format(a);
  });
  c.check("M_DLR3", "k is the possibility-correspondence operator of alpha->{alpha w1 w2}, w1->{w1}, w2->{w2}",
          [&](bool& ok) {
            Relation r = Relation::identity(3);
            r.add(alpha, d.index_of("w1"));
            r.add(alpha, d.index_of("w2"));
            ok = dlr3.operators(0).knowledge == knowledge_table(r);
            return verdict(ok);
          });
  c.check("M_DLR3", "with v(p) = {alpha w1}, [[A_1 p]] = {w2} and alpha is in [[U_1 p]]", [&](bool& ok) {
    const Valuation v{{"p", e}};
    const Event a = evaluate(dlr3, v, parse("A_1 p"));
    ok = a == d.event_of({"w2"}) && evaluate(dlr3, v, parse("U_1 p")).contains(alpha);
    return d.format(a);
  });
  for (const char* name : {"Necessitation", "Monotonicity", "Distribution", "AntiNecessitation", "Reflexivity",
                           "PositiveIntrospection", "WeakNecessitation"}) {
    c.check("M_DLR3", std::string(name) + " is valid on the whole model", [&, name](bool& ok) {
      ok = schema_check(dlr3, name);
      return verdict(ok);
    });
  }
  for (const char* name : {"Plausibility", "KU-Introspection", "AU-Introspection"}) {
    c.check("M_DLR3", std::string(name) + " is valid at alpha", [&, name](bool& ok) {
      ok = schema_check(dlr3, name, alpha);
      return verdict(ok);
    });
  }
  c.check("M_DLR3", "~K_1 U_1 p is valid at alpha", [&](bool& ok) {
    ok = valid_at(dlr3, alpha, parse("~K_1 U_1 p"));
    return verdict(ok);
  });
  c.check("M_DLR3", "nPlausibility(n) is valid at alpha for n = 1..5", [&](bool& ok) {
    ok = true;
    for (int n = 1; n <= 5; ++n) ok = ok && schema_check(dlr3, "nPlausibility", alpha, n);
    return verdict(ok);
  });
  c.check("M_DLR3", "dlr_report at alpha with n up to 5 passes", [&](bool& ok) {
    ok = dlr_report(dlr3, alpha, 5).all_hold();
    return verdict(ok);
  });
  c.check("M_DLR3", "alpha is not in a({alpha w1})", [&](bool& ok) {
    ok = !awareness_event(dlr3, "1", e).contains(alpha);
    return verdict(ok);
  });
  c.check("M_DLR3", "alpha is in k(Omega) and in a(Omega)", [&](bool& ok) {
    ok = knowledge_event(dlr3, "1", d.full_event()).contains(alpha) &&
         awareness_event(dlr3, "1", d.full_event()).contains(alpha);
    return verdict(ok);
  });
  c.check("M_DLR3", "the unawareness witness at alpha contains w1 and not w2", [&](bool& ok) {
    const auto w = unawareness_witness(dlr3, alpha, "1");
    ok = w && w->contains(d.index_of("w1")) && !w->contains(d.index_of("w2"));
    return w ? d.format(*w) : std::string("none");
  });
  c.check("M_DLR3", "the knowledge part extends to a DLR model at alpha unaware of {alpha w1}", [&](bool& ok) {
    const auto ext = extend_to_dlr(knowledge_part(dlr3, "1"), alpha, e);
    ok = ext.has_value();
    if (ext) {
      for (const char* name : {"Plausibility", "KU-Introspection", "AU-Introspection", "Necessitation",
                               "Monotonicity", "AntiNecessitation"}) {
        ok = ok && schema_check(ext->model, name, alpha);
      }
      ok = ok && !awareness_event(ext->model, "1", e).contains(alpha);
    }
    return ext ? "F = " + d.format(ext->auxiliary) : std::string("none");
  });

  // Four-state ring.
  const PartitionalModel ring = builtin_ring4();
  const StateSpace& r = ring.space();
  const std::size_t one = r.index_of("1");
  c.check("M_RING4", "k(Omega) = Omega; the strongest event known at 1 is Omega", [&](bool& ok) {
    ok = knowledge_event(ring, "1", r.full_event()).is_full();
    for (const Event& f : r.enumerate_events()) {
      if (!f.is_full() && knowledge_event(ring, "1", f).contains(one)) ok = false;
    }
    return verdict(ok);
  });
  c.check("M_RING4", "the partition at 2 is {1} {2} {3 4}", [&](bool& ok) {
    const Partition& p = ring.partition(0, r.index_of("2"));
    ok = p.blocks() == std::vector<Mask>{bit(0), bit(1), bit(2) | bit(3)};
    std::string s;
    for (Mask b : p.blocks()) s += r.format(b);
    return s;
  });
  c.check("M_RING4", "K_1 exists p. U_1 p & ~exists p. K_1 U_1 p is valid at 1", [&](bool& ok) {
    ok = valid_at(ring, one, parse("K_1 exists p. U_1 p & ~exists p. K_1 U_1 p"));
    return verdict(ok);
  });
  c.check("M_RING4", "dlr_report at 1 passes", [&](bool& ok) {
    ok = dlr_report(ring, one, 1).all_hold();
    return verdict(ok);
  });
  c.check("M_RING4", "every state is coherent", [&](bool& ok) {
    ok = true;
    for (std::size_t s = 0; s < r.size(); ++s) ok = ok && is_coherent(ring, s).coherent;
    return verdict(ok);
  });
  c.check("M_RING4", "A-4ij and AK-4 are valid at every state", [&](bool& ok) {
    ok = schema_check(ring, "A-4ij") && schema_check(ring, "AK-4");
    return verdict(ok);
  });
  c.check("M_RING4", "the automorphism group has order 6", [&](bool& ok) {
    const std::size_t order = automorphisms(ring).size();
    ok = order == 6;
    return std::to_string(order);
  });

  // Speculative trade.
  c.check("trade", "M_TRADE5 has ~A_1 = {1} {2 3} {4} {5}", [](bool& ok) {
    const PartitionalModel t = builtin_trade5();
    ok = t.partition(t.agent_index("A"), 0).blocks() == std::vector<Mask>{bit(0), bit(1) | bit(2), bit(3), bit(4)};
    return verdict(ok);
  });
  const ChoiceScenario sc = trade5_scenario();
  const StateSpace& w = sc.space();
  c.check("trade", "Alice's expected utility of f given {1 2 3} is 13/3", [&](bool& ok) {
    const Rational v = conditional_eu(sc, "f", w.event_of({"1", "2", "3"}));
    ok = v == Rational(13, 3);
    return to_string(v);
  });
  c.check("trade", "Bob's expected utility of f given the whole space is 19/5", [&](bool& ok) {
    const Rational v = conditional_eu(sc, "f", w.full_event());
    ok = v == Rational(19, 5);
    return to_string(v);
  });
  c.check("trade", "the expected utility of g is 4 on every information set", [&](bool& ok) {
    ok = true;
    for (const auto& a : sc.agents()) {
      for (std::size_t s = 0; s < w.size(); ++s) ok = ok && conditional_eu(sc, "g", sc.information(a.name, s)) == 4;
    }
    return verdict(ok);
  });
  c.check("trade", "Alice prefers f at states 1 and 3", [&](bool& ok) {
    const Preference p1 = preferred_act(sc, "A", w.index_of("1"));
    const Preference p3 = preferred_act(sc, "A", w.index_of("3"));
    ok = p1.act == "f" && p1.strict && p3.act == "f" && p3.strict && p3.eu[0].second == 7;
    return p1.act + ", " + p3.act;
  });
  c.check("trade", "Bob strictly prefers g at every state", [&](bool& ok) {
    ok = true;
    for (std::size_t s = 0; s < w.size(); ++s) {
      const Preference p = preferred_act(sc, "B", s);
      ok = ok && p.act == "g" && p.strict;
    }
    return verdict(ok);
  });
  c.check("trade", "trade is possible at all five states", [&](bool& ok) {
    const TradeReport rep = trade_report(sc);
    ok = rep.rows.size() == 5;
    for (const auto& row : rep.rows) ok = ok && row.trade_possible;
    return verdict(ok);
  });

  // Calculi.
  c.check("calculus", "the derivation of ~K_1 U_1 p in the dlr calculus is accepted", [](bool& ok) {
    const ProofVerdict v = check_proof(parse_proof(not_knows_unaware_proof()));
    ok = v.accepted;
    return ok ? std::string("accepted") : "line " + std::to_string(v.bad_line) + ": " + v.reason;
  });
  c.check("calculus", "A_1 true is accepted as an instance of A-N", [](bool& ok) {
    const ProofVerdict v = check_proof(parse_proof("calculus: base\n1. A_1 true ; ax A-N\n"));
    ok = v.accepted;
    return ok ? std::string("accepted") : v.reason;
  });

  return c.take();
}

}  // namespace aware
