#ifndef AWARE_SEMANTICS_HPP_
#define AWARE_SEMANTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aware/formula.hpp"
#include "aware/models.hpp"
#include "aware/statespace.hpp"

namespace aware {

struct EvalOptions {
  /// Largest |Omega| for which quantifiers and letter enumeration run.
  std::size_t event_cap = kDefaultEventCap;
  /// Validity checks refuse more valuations than this unless `force`.
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
  bool force = false;
};

/// Assignment of events to proposition letters.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, Event>> entries) : entries_(entries) {}

  void set(const std::string& letter, const Event& e) { entries_[letter] = e; }
  const Event* find(std::string_view letter) const;
  /// Throws Error when the letter is unassigned.
  const Event& at(std::string_view letter) const;
  const std::map<std::string, Event, std::less<>>& entries() const { return entries_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, Event, std::less<>> entries_;
};

/// A formula resolved against a model's agents, ready for repeated
/// evaluation. Free letters occupy value slots in alphabetical order.
class CompiledFormula {
 public:
  /// Throws UnknownAgent for agents the model lacks and CapExceeded when
  /// the formula quantifies over a space larger than `options.event_cap`.
  CompiledFormula(const Formula& f, const Model& m, const EvalOptions& options = {});

  const std::vector<std::string>& free_letters() const { return free_letters_; }
  /// `free_values[i]` is the event assigned to `free_letters()[i]`.
  Mask evaluate(std::span<const Mask> free_values) const;

 private:
  struct Node {
    Op op;
    int lhs = -1;
    int rhs = -1;
    int slot = -1;
    std::size_t agent = 0;
  };

  int compile(const Formula& f, std::map<std::string, std::vector<int>>& scope);
  Mask eval(int node, std::vector<Mask>& env) const;

  const Model* model_;
  std::vector<Node> nodes_;
  std::vector<std::string> free_letters_;
  int root_ = -1;
  int slots_ = 0;
};

/// The event expressed by `f` under `v`. Throws Error when a free letter is
/// unassigned.
Event evaluate(const Model& m, const Valuation& v, const Formula& f, const EvalOptions& options = {});

/// A valuation (and state) at which a formula is false.
struct Refutation {
  Valuation valuation;
  std::size_t state;
};

/// Searches valuations of the free letters in canonical order (first letter
/// most significant, events bitmask-ascending) for one making `f` false at
/// `state`, or at any state when `state` is empty. Throws CapExceeded when
/// the number of valuations exceeds the guard.
std::optional<Refutation> refute(const Model& m, const Formula& f, std::optional<std::size_t> state,
                                 const EvalOptions& options = {});

/// `state` belongs to the extension of `f` under every valuation.
bool valid_at(const Model& m, std::size_t state, const Formula& f, const EvalOptions& options = {});
/// `f` expresses Omega under every valuation.
bool valid_on(const Model& m, const Formula& f, const EvalOptions& options = {});

/// Axiom schema: a formula over letters p, q with agent placeholders
/// "i" (and "j" for the two-agent schemas).
struct AxiomSchema {
  std::string name;
  Formula pattern;
  std::vector<std::string> agent_params;
  std::optional<int> n;
};

/// Registered schema names; "nPlausibility" takes the parameter n >= 1.
const std::vector<std::string>& schema_names();
/// Throws Error for unknown names and for a missing or invalid n.
AxiomSchema schema(std::string_view name, std::optional<int> n = std::nullopt);
/// Replaces the placeholders by `agents` (one per parameter).
Formula instantiate(const AxiomSchema& s, const std::vector<std::string>& agents);

struct SchemaFailure {
  std::vector<std::string> agents;
  Refutation refutation;
};

/// First failing instantiation (agent tuples in model order), if any.
/// With `only_agent` set, only tuples whose first agent is that agent.
std::optional<SchemaFailure> find_schema_failure(const Model& m, const AxiomSchema& s, std::optional<std::size_t> state,
                                                 std::optional<std::string> only_agent = std::nullopt,
                                                 const EvalOptions& options = {});

/// Validity of every instantiation of the schema over the model's agents,
/// at `state` or, when empty, on the whole model.
bool schema_check(const Model& m, const AxiomSchema& s, std::optional<std::size_t> state = std::nullopt,
                  const EvalOptions& options = {});
bool schema_check(const Model& m, std::string_view name, std::optional<std::size_t> state = std::nullopt,
                  std::optional<int> n = std::nullopt, const EvalOptions& options = {});

}  // namespace aware

#endif  // AWARE_SEMANTICS_HPP_
