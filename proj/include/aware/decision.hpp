#ifndef AWARE_DECISION_HPP_
#define AWARE_DECISION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aware/models.hpp"
#include "aware/statespace.hpp"

namespace aware {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-2" or "13/3". Throws Error.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

struct Act {
  std::string name;
  std::vector<Rational> utility;  // per state
};

struct ScenarioAgent {
  std::string name;
  Relation accessibility;
  /// Attention partition (atoms of the context's subalgebra) per state;
  /// states without an entry attend to every event.
  std::map<std::size_t, Partition> attention;
};

/// A finite measure space with a prior, acts, and agents.
class ChoiceScenario {
 public:
  /// Throws ModelError unless the prior is nonnegative and sums to exactly
  /// 1, every act is total, act and agent names are distinct, relations
  /// and partitions match the space, and relations are reflexive.
  ChoiceScenario(StateSpace space, std::vector<Rational> prior, std::vector<Act> acts,
                 std::vector<ScenarioAgent> agents);

  const StateSpace& space() const { return space_; }
  const std::vector<Rational>& prior() const { return prior_; }
  const std::vector<Act>& acts() const { return acts_; }
  const std::vector<ScenarioAgent>& agents() const { return agents_; }

  const Act& act(std::string_view name) const;
  const ScenarioAgent& agent(std::string_view name) const;

  Rational measure(Mask e) const;
  /// P^i(state).
  Event information(std::string_view agent, std::size_t state) const;
  /// The agent's attention subalgebra at `state` (the full algebra when
  /// none was given).
  Partition attention(std::string_view agent, std::size_t state) const;

  /// Partitional structure of the scenario (reflexive-transitive closure
  /// of each relation, attention partitions as awareness partitions).
  PartitionalModel structure() const;

 private:
  StateSpace space_;
  std::vector<Rational> prior_;
  std::vector<Act> acts_;
  std::vector<ScenarioAgent> agents_;
};

/// A complete atomic subalgebra, given by its atoms.
class Subalgebra {
 public:
  explicit Subalgebra(Partition atoms) : atoms_(std::move(atoms)) {}
  static Subalgebra full(std::size_t n) { return Subalgebra(Partition::discrete(n)); }

  const Partition& atoms() const { return atoms_; }
  bool contains(Mask e) const { return atoms_.splits_none(e); }
  /// Every union of atoms, in bitmask order.
  std::vector<Mask> events() const;

 private:
  Partition atoms_;
};

/// mu(e) when e is in the subalgebra, empty (undefined) otherwise.
std::optional<Rational> restrict_measure(const ChoiceScenario& sc, const Subalgebra& alg, const Event& e);

/// Events of the subalgebra with restricted measure 1.
std::vector<Event> explicit_beliefs(const ChoiceScenario& sc, const Subalgebra& alg);

/// Expected utility of `act` conditional on `info`. Throws ModelError when
/// info has prior measure 0.
Rational conditional_eu(const ChoiceScenario& sc, std::string_view act, const Event& info);

struct Preference {
  std::string agent;
  std::size_t state = 0;
  std::string act;  // argmax; ties go to the lexicographically least name
  bool strict = false;  // act beats every other act strictly
  std::vector<std::pair<std::string, Rational>> eu;  // in act order
};

/// Best act of `agent` at `state`, conditioning on P^agent(state).
Preference preferred_act(const ChoiceScenario& sc, std::string_view agent, std::size_t state);

struct TradeRow {
  std::size_t state = 0;
  std::vector<Preference> preferences;  // in agent order
  /// Two distinct agents strictly prefer two different acts.
  bool trade_possible = false;
};

struct TradeReport {
  std::vector<TradeRow> rows;
  bool trade_anywhere() const;
};

TradeReport trade_report(const ChoiceScenario& sc);

/// Uniform prior on {1..5}, acts f = (1,5,7,5,1) and g = 4, Alice ("A") and
/// Bob ("B") with the relations and attention partitions of builtin_trade5.
ChoiceScenario trade5_scenario();

/// Scenario file text:
///
///   states: s1 s2 ...
///   prior: q1 q2 ...
///   act <name>: u1 u2 ...
///   agent <id>: R: <a->b ...> | all | identity
///   attention @<state>: {..} {..} ...     (applies to the last agent)
///
/// Relations are closed reflexively and transitively. `#` comments. Throws
/// ParseError or ModelError.
ChoiceScenario parse_scenario(std::string_view text);
std::string render_scenario(const ChoiceScenario& sc);

/// "trade5" or "m_trade5" (any case) for trade5_scenario(), otherwise a
/// path to a scenario file.
ChoiceScenario load_scenario(const std::string& name_or_path);

}  // namespace aware

#endif  // AWARE_DECISION_HPP_
