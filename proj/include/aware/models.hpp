#ifndef AWARE_MODELS_HPP_
#define AWARE_MODELS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "aware/statespace.hpp"

namespace aware {

/// Binary relation on the states of a space, stored as successor rows.
class Relation {
 public:
  explicit Relation(std::size_t n) : rows_(n, 0) {}
  explicit Relation(std::vector<Mask> rows) : rows_(std::move(rows)) {}
  static Relation identity(std::size_t n);
  static Relation all(std::size_t n);
  static Relation from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return rows_.size(); }
  bool related(std::size_t x, std::size_t y) const { return has(rows_[x], y); }
  Mask successors(std::size_t x) const { return rows_[x]; }
  const std::vector<Mask>& rows() const { return rows_; }
  void add(std::size_t x, std::size_t y) { rows_[x] |= bit(y); }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_symmetric() const;
  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool is_equivalence() const { return is_preorder() && is_symmetric(); }
  bool is_identity() const { return *this == identity(size()); }
  bool is_all() const { return *this == all(size()); }
  Relation reflexive_transitive_closure() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Mask> rows_;
};

/// Partition of a finite space, canonically ordered by each block's
/// lowest member. Equivalent to an equivalence relation.
class Partition {
 public:
  /// Throws ModelError unless the blocks are nonempty, disjoint, and
  /// cover all n states.
  Partition(std::vector<Mask> blocks, std::size_t n);
  static Partition discrete(std::size_t n);
  static Partition single_block(std::size_t n);
  /// From block labels per state (any labelling, not necessarily canonical).
  static Partition from_labels(const std::vector<std::size_t>& labels);

  std::size_t universe() const { return universe_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  Mask block_of(std::size_t state) const;
  bool same_block(std::size_t x, std::size_t y) const { return has(block_of(x), y); }
  /// True iff e is a union of blocks.
  bool splits_none(Mask e) const;
  /// Restricted-growth labelling: block index of every state.
  std::vector<std::size_t> labels() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Mask> blocks_;
  std::size_t universe_;
};

/// Common interface of the standard and partitional models: per-agent
/// knowledge and awareness operators on events.
class Model {
 public:
  virtual ~Model() = default;

  const StateSpace& space() const { return space_; }
  const std::vector<std::string>& agents() const { return agents_; }
  std::optional<std::size_t> find_agent(std::string_view agent) const;
  /// Throws UnknownAgent.
  std::size_t agent_index(std::string_view agent) const;

  virtual Mask knowledge(std::size_t agent, Mask e) const = 0;
  virtual Mask awareness(std::size_t agent, Mask e) const = 0;

  /// Intersection of k^n(e) over all n >= 1. The sequence k(e), k(k(e)), ...
  /// lives in a finite set, so it is followed until an event repeats and
  /// the recorded events are intersected; this is exact.
  Mask common_knowledge(std::size_t agent, Mask e) const;

 protected:
  Model(StateSpace space, std::vector<std::string> agents);

 private:
  StateSpace space_;
  std::vector<std::string> agents_;
};

/// k or a of one agent, indexed by the event's bitmask.
using OperatorTable = std::vector<Mask>;

struct AgentOperators {
  OperatorTable knowledge;
  OperatorTable awareness;
};

/// A model given directly by operator tables on all 2^|Omega| events.
class StandardModel final : public Model {
 public:
  /// Throws ModelError when a table has the wrong length or maps outside
  /// the space, CapExceeded when |Omega| exceeds `cap`.
  StandardModel(StateSpace space, std::vector<std::string> agents, std::vector<AgentOperators> operators,
                std::size_t cap = kDefaultEventCap);

  /// Tabulates the operators of any model.
  static StandardModel tabulate(const Model& m, std::size_t cap = kDefaultEventCap);

  Mask knowledge(std::size_t agent, Mask e) const override { return operators_[agent].knowledge[e]; }
  Mask awareness(std::size_t agent, Mask e) const override { return operators_[agent].awareness[e]; }
  const AgentOperators& operators(std::size_t agent) const { return operators_[agent]; }

  friend bool operator==(const StandardModel& a, const StandardModel& b);

 private:
  std::vector<AgentOperators> operators_;
};

/// Accessibility relation plus one awareness partition per state.
struct AgentFrame {
  Relation accessibility;
  std::vector<Partition> awareness;
};

enum class RelationRepair {
  kReject,  // non-preorders are errors
  kClose,   // replaced by their reflexive-transitive closure
};

/// <Omega, R^i, ~^i>: R^i reflexive and transitive, ~^i_w an equivalence
/// relation (stored as a partition) for every state w.
class PartitionalModel final : public Model {
 public:
  PartitionalModel(StateSpace space, std::vector<std::string> agents, std::vector<AgentFrame> frames,
                   RelationRepair repair = RelationRepair::kReject);

  /// {s : P(s) is a subset of e}.
  Mask knowledge(std::size_t agent, Mask e) const override;
  /// {s : e is a union of cells of ~_s}.
  Mask awareness(std::size_t agent, Mask e) const override;

  const AgentFrame& frame(std::size_t agent) const { return frames_[agent]; }
  const Relation& relation(std::size_t agent) const { return frames_[agent].accessibility; }
  const Partition& partition(std::size_t agent, std::size_t state) const { return frames_[agent].awareness[state]; }
  /// P^i(s) = {t : R^i s t}.
  Mask possibility(std::size_t agent, std::size_t state) const { return relation(agent).successors(state); }

  friend bool operator==(const PartitionalModel& a, const PartitionalModel& b);

 private:
  std::vector<AgentFrame> frames_;
};

Event knowledge_event(const Model& m, std::string_view agent, const Event& e);
Event awareness_event(const Model& m, std::string_view agent, const Event& e);
Event common_knowledge_event(const Model& m, std::string_view agent, const Event& e);

/// Standard model determined by a partitional model.
StandardModel derive_standard(const PartitionalModel& pm, std::size_t cap = kDefaultEventCap);

/// k table of the possibility correspondence of `r`.
OperatorTable knowledge_table(const Relation& r);

using AnyModel = std::variant<StandardModel, PartitionalModel>;

const Model& as_model(const AnyModel& m);

/// Three-state counterexample: alpha sees {alpha, w1, w2}, w1 and w2 see
/// themselves; a(F) = {w2} when w1 is in F and w2 is not, otherwise Omega.
StandardModel builtin_dlr3();
/// Four-state ring: 1 sees everything, every other state only itself.
PartitionalModel builtin_ring4();
/// Two-agent speculative-trade structure on {1..5} (agents "A" and "B").
PartitionalModel builtin_trade5();

/// Case-insensitive: "M_DLR3", "M_RING4", "M_TRADE5". Throws Error otherwise.
AnyModel builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace aware

#endif  // AWARE_MODELS_HPP_
