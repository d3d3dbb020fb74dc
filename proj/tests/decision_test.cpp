#include "aware/decision.hpp"

#include <gtest/gtest.h>

#include "aware/analysis.hpp"
#include "aware/dlr_model.hpp"
#include "aware/error.hpp"

namespace aware {
namespace {

Rational q(const char* text) { return parse_rational(text); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(q("13/3"), Rational(13) / 3);
  EXPECT_EQ(q("-2"), Rational(-2));
  EXPECT_EQ(q("4/2"), Rational(2));
  EXPECT_EQ(to_string(q("26/6")), "13/3");
  EXPECT_EQ(to_string(q("5")), "5");
  EXPECT_THROW(q("1/0"), Error);
  EXPECT_THROW(q("x"), Error);
  EXPECT_THROW(q("1.5"), Error);
}

// Brute-force EU: sum over states of prior * utility, divided by the mass.
Rational eu_oracle(const ChoiceScenario& sc, const std::string& act, Mask info) {
  Rational num = 0;
  Rational den = 0;
  for (std::size_t s = 0; s < sc.space().size(); ++s) {
    if (!has(info, s)) continue;
    num += sc.prior()[s] * sc.act(act).utility[s];
    den += sc.prior()[s];
  }
  return num / den;
}

TEST(Trade5, ConditionalExpectedUtilities) {
  const ChoiceScenario sc = trade5_scenario();
  const std::vector<const char*> alice{"13/3", "5", "7", "5", "13/3"};
  for (std::size_t s = 0; s < 5; ++s) {
    const Event info = sc.information("A", s);
    EXPECT_EQ(conditional_eu(sc, "f", info), q(alice[s])) << s;
    EXPECT_EQ(conditional_eu(sc, "f", info), eu_oracle(sc, "f", info.bits()));
    EXPECT_EQ(conditional_eu(sc, "g", info), q("4"));
    EXPECT_EQ(conditional_eu(sc, "f", sc.information("B", s)), q("19/5"));
    EXPECT_EQ(conditional_eu(sc, "g", sc.information("B", s)), q("4"));
  }
}

TEST(Trade5, PreferencesAndTrade) {
  const ChoiceScenario sc = trade5_scenario();
  for (std::size_t s = 0; s < 5; ++s) {
    const Preference a = preferred_act(sc, "A", s);
    const Preference b = preferred_act(sc, "B", s);
    EXPECT_EQ(a.act, "f");
    EXPECT_TRUE(a.strict);
    EXPECT_EQ(b.act, "g");
    EXPECT_TRUE(b.strict);
  }
  const TradeReport report = trade_report(sc);
  ASSERT_EQ(report.rows.size(), 5u);
  for (const TradeRow& row : report.rows) EXPECT_TRUE(row.trade_possible) << row.state;
  EXPECT_TRUE(report.trade_anywhere());
}

TEST(Trade5, StructureHasUnawareness) {
  const ChoiceScenario sc = trade5_scenario();
  const PartitionalModel pm = sc.structure();
  const auto w = unawareness_witness(pm, 0, "A");
  ASSERT_TRUE(w);
  EXPECT_FALSE(has(pm.awareness(pm.agent_index("A"), w->bits()), 0));
  for (std::size_t s : {0u, 2u, 4u}) EXPECT_TRUE(dlr_axioms_hold(pm, s)) << s;
  EXPECT_FALSE(pm.relation(0).is_symmetric());
}

TEST(Subalgebra, RestrictedMeasureAndBeliefs) {
  const ChoiceScenario sc = trade5_scenario();
  const Subalgebra coarse(Partition({bit(0) | bit(1), bit(2), bit(3) | bit(4)}, 5));
  EXPECT_EQ(*restrict_measure(sc, coarse, sc.space().event_of({"1", "2"})), q("2/5"));
  EXPECT_EQ(*restrict_measure(sc, coarse, sc.space().event_of({"1", "2", "3"})), q("3/5"));
  EXPECT_FALSE(restrict_measure(sc, coarse, sc.space().event_of({"1"})));
  EXPECT_EQ(coarse.events().size(), 8u);
  const std::vector<Event> beliefs = explicit_beliefs(sc, coarse);
  ASSERT_EQ(beliefs.size(), 1u);
  EXPECT_TRUE(beliefs[0].is_full());
  EXPECT_EQ(Subalgebra::full(5).events().size(), 32u);
}

TEST(Subalgebra, BeliefsSkipNullAtoms) {
  const ChoiceScenario sc(StateSpace::numbered(3), {q("1/2"), q("1/2"), q("0")}, {Act{"f", {q("1"), q("2"), q("3")}}},
                          {ScenarioAgent{"A", Relation::all(3), {}}});
  const std::vector<Event> beliefs = explicit_beliefs(sc, Subalgebra::full(3));
  ASSERT_EQ(beliefs.size(), 2u);
  EXPECT_EQ(beliefs[0], sc.space().event_of({"1", "2"}));
  EXPECT_THROW(conditional_eu(sc, "f", sc.space().event_of({"3"})), ModelError);
  EXPECT_EQ(conditional_eu(sc, "f", sc.space().full_event()), q("3/2"));
}

TEST(Trade, NoTradeCases) {
  const StateSpace sp = StateSpace::numbered(2);
  const std::vector<Rational> prior{q("1/2"), q("1/2")};
  // A single act leaves nothing to trade.
  const ChoiceScenario one(sp, prior, {Act{"f", {q("0"), q("1")}}},
                           {ScenarioAgent{"A", Relation::identity(2), {}}, ScenarioAgent{"B", Relation::all(2), {}}});
  EXPECT_FALSE(trade_report(one).trade_anywhere());
  // With the same information, agents with a common prior agree.
  const ChoiceScenario same(sp, prior, {Act{"f", {q("0"), q("3")}}, Act{"g", {q("1"), q("1")}}},
                            {ScenarioAgent{"A", Relation::identity(2), {}}, ScenarioAgent{"B", Relation::identity(2), {}}});
  EXPECT_FALSE(trade_report(same).trade_anywhere());
  // Ties are not strict preferences.
  const ChoiceScenario tie(sp, prior, {Act{"f", {q("1"), q("1")}}, Act{"g", {q("1"), q("1")}}},
                           {ScenarioAgent{"A", Relation::identity(2), {}}, ScenarioAgent{"B", Relation::all(2), {}}});
  const Preference p = preferred_act(tie, "A", 0);
  EXPECT_EQ(p.act, "f");
  EXPECT_FALSE(p.strict);
  EXPECT_FALSE(trade_report(tie).trade_anywhere());
}

TEST(Scenario, Validation) {
  const StateSpace sp = StateSpace::numbered(2);
  const std::vector<ScenarioAgent> agents{ScenarioAgent{"A", Relation::all(2), {}}};
  const Act f{"f", {q("1"), q("2")}};
  EXPECT_THROW(ChoiceScenario(sp, {q("1/2"), q("1/3")}, {f}, agents), ModelError);
  EXPECT_THROW(ChoiceScenario(sp, {q("3/2"), q("-1/2")}, {f}, agents), ModelError);
  EXPECT_THROW(ChoiceScenario(sp, {q("1/2"), q("1/2")}, {Act{"f", {q("1")}}}, agents), ModelError);
  EXPECT_THROW(ChoiceScenario(sp, {q("1/2"), q("1/2")}, {f, f}, agents), ModelError);
  Relation irreflexive(2);
  irreflexive.add(0, 1);
  EXPECT_THROW(ChoiceScenario(sp, {q("1/2"), q("1/2")}, {f}, {ScenarioAgent{"A", irreflexive, {}}}), ModelError);
  EXPECT_THROW(trade5_scenario().act("h"), Error);
  EXPECT_THROW(trade5_scenario().agent("C"), UnknownAgent);
}

TEST(Scenario, TextRoundTrip) {
  const ChoiceScenario sc = trade5_scenario();
  const std::string text = render_scenario(sc);
  const ChoiceScenario back = parse_scenario(text);
  EXPECT_EQ(render_scenario(back), text);
  EXPECT_EQ(back.prior(), sc.prior());
  for (std::size_t s = 0; s < 5; ++s) {
    EXPECT_EQ(back.information("A", s), sc.information("A", s));
    EXPECT_EQ(back.attention("A", s), sc.attention("A", s));
  }
  EXPECT_EQ(render_scenario(load_scenario("TRADE5")), text);
}

TEST(Scenario, ParseErrors) {
  EXPECT_THROW(parse_scenario("prior: 1\n"), ParseError);
  EXPECT_THROW(parse_scenario("states: 1 2\nprior: 1/2 1/2\nact f: 1\nagent A: R: all\n"), ModelError);
  EXPECT_THROW(parse_scenario("states: 1 2\nprior: 1/2 1/2\nact f: 1 2\nattention @1: {1} {2}\n"), ParseError);
  try {
    parse_scenario("states: 1 2\nprior: 1/2 1/2\nact f: 1 2\nagent A: R: 1->3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(load_scenario("/nonexistent/scenario"), Error);
}

}  // namespace
}  // namespace aware
