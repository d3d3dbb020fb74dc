#include "aware/models.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "aware/error.hpp"

namespace aware {

// ---------------------------------------------------------------------------
// Relation

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.add(i, i);
  return r;
}

Relation Relation::all(std::size_t n) { return Relation(std::vector<Mask>(n, full_mask(n))); }

Relation Relation::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Relation r(n);
  for (auto [x, y] : edges) {
    if (x >= n || y >= n) throw ModelError("relation edge out of range");
    r.add(x, y);
  }
  return r;
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!related(i, i)) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (Mask m = rows_[x]; m != 0; m &= m - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(m));
      if ((rows_[y] & ~rows_[x]) != 0) return false;
    }
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (related(x, y) != related(y, x)) return false;
    }
  }
  return true;
}

Relation Relation::reflexive_transitive_closure() const {
  std::vector<Mask> rows = rows_;
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] |= bit(i);
  // Warshall.
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (has(rows[i], k)) rows[i] |= rows[k];
    }
  }
  return Relation(std::move(rows));
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<Mask> blocks, std::size_t n) : blocks_(std::move(blocks)), universe_(n) {
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw ModelError("partition has an empty block");
    if ((b & seen) != 0) throw ModelError("partition blocks overlap");
    if ((b & ~full_mask(n)) != 0) throw ModelError("partition block outside the space");
    seen |= b;
  }
  if (seen != full_mask(n)) throw ModelError("partition does not cover the space");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Mask> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(bit(i));
  return Partition(std::move(blocks), n);
}

Partition Partition::single_block(std::size_t n) { return Partition({full_mask(n)}, n); }

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  std::vector<std::pair<std::size_t, Mask>> by_label;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    auto it = std::find_if(by_label.begin(), by_label.end(), [&](const auto& p) { return p.first == labels[s]; });
    if (it == by_label.end()) {
      by_label.emplace_back(labels[s], bit(s));
    } else {
      it->second |= bit(s);
    }
  }
  std::vector<Mask> blocks;
  for (const auto& p : by_label) blocks.push_back(p.second);
  return Partition(std::move(blocks), labels.size());
}

Mask Partition::block_of(std::size_t state) const {
  for (Mask b : blocks_) {
    if (has(b, state)) return b;
  }
  return 0;
}

bool Partition::splits_none(Mask e) const {
  for (Mask b : blocks_) {
    const Mask in = b & e;
    if (in != 0 && in != b) return false;
  }
  return true;
}

std::vector<std::size_t> Partition::labels() const {
  std::vector<std::size_t> out(universe_, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Mask m = blocks_[i]; m != 0; m &= m - 1) out[static_cast<std::size_t>(std::countr_zero(m))] = i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model

Model::Model(StateSpace space, std::vector<std::string> agents) : space_(std::move(space)), agents_(std::move(agents)) {
  std::set<std::string> seen;
  for (const auto& a : agents_) {
    if (a.empty()) throw ModelError("empty agent name");
    if (!seen.insert(a).second) throw ModelError("duplicate agent '" + a + "'");
  }
}

std::optional<std::size_t> Model::find_agent(std::string_view agent) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == agent) return i;
  }
  return std::nullopt;
}

std::size_t Model::agent_index(std::string_view agent) const {
  if (auto i = find_agent(agent)) return *i;
  throw UnknownAgent(std::string(agent));
}

Mask Model::common_knowledge(std::size_t agent, Mask e) const {
  std::unordered_set<Mask> visited;
  Mask result = space_.all_bits();
  Mask current = knowledge(agent, e);
  while (visited.insert(current).second) {
    result &= current;
    current = knowledge(agent, current);
  }
  return result;
}

// ---------------------------------------------------------------------------
// StandardModel

StandardModel::StandardModel(StateSpace space, std::vector<std::string> agents, std::vector<AgentOperators> operators,
                             std::size_t cap)
    : Model(std::move(space), std::move(agents)), operators_(std::move(operators)) {
  require_enumerable(this->space().size(), cap);
  if (operators_.size() != this->agents().size()) throw ModelError("one operator pair per agent required");
  const std::size_t events = std::size_t{1} << this->space().size();
  const Mask all = this->space().all_bits();
  for (const auto& ops : operators_) {
    for (const OperatorTable* t : {&ops.knowledge, &ops.awareness}) {
      if (t->size() != events) throw ModelError("operator table must cover all events");
      for (Mask m : *t) {
        if ((m & ~all) != 0) throw ModelError("operator table maps outside the space");
      }
    }
  }
}

StandardModel StandardModel::tabulate(const Model& m, std::size_t cap) {
  require_enumerable(m.space().size(), cap);
  const std::size_t events = std::size_t{1} << m.space().size();
  std::vector<AgentOperators> ops(m.agents().size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    ops[i].knowledge.resize(events);
    ops[i].awareness.resize(events);
    for (Mask e = 0; e < events; ++e) {
      ops[i].knowledge[e] = m.knowledge(i, e);
      ops[i].awareness[e] = m.awareness(i, e);
    }
  }
  return StandardModel(m.space(), m.agents(), std::move(ops), cap);
}

bool operator==(const StandardModel& a, const StandardModel& b) {
  if (!(a.space() == b.space()) || a.agents() != b.agents()) return false;
  for (std::size_t i = 0; i < a.operators_.size(); ++i) {
    if (a.operators_[i].knowledge != b.operators_[i].knowledge) return false;
    if (a.operators_[i].awareness != b.operators_[i].awareness) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PartitionalModel

PartitionalModel::PartitionalModel(StateSpace space, std::vector<std::string> agents, std::vector<AgentFrame> frames,
                                   RelationRepair repair)
    : Model(std::move(space), std::move(agents)), frames_(std::move(frames)) {
  const std::size_t n = this->space().size();
  if (frames_.size() != this->agents().size()) throw ModelError("one frame per agent required");
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    auto& f = frames_[i];
    const std::string& who = this->agents()[i];
    if (f.accessibility.size() != n) throw ModelError("relation of agent '" + who + "' has the wrong size");
    for (Mask row : f.accessibility.rows()) {
      if ((row & ~full_mask(n)) != 0) throw ModelError("relation of agent '" + who + "' leaves the space");
    }
    if (!f.accessibility.is_preorder()) {
      if (repair == RelationRepair::kClose) {
        f.accessibility = f.accessibility.reflexive_transitive_closure();
      } else {
        throw ModelError("relation of agent '" + who + "' is not " +
                         (f.accessibility.is_reflexive() ? "transitive" : "reflexive"));
      }
    }
    if (f.awareness.size() != n) throw ModelError("agent '" + who + "' needs one partition per state");
    for (const auto& p : f.awareness) {
      if (p.universe() != n) throw ModelError("partition of agent '" + who + "' has the wrong size");
    }
  }
}

Mask PartitionalModel::knowledge(std::size_t agent, Mask e) const {
  const Relation& r = frames_[agent].accessibility;
  Mask out = 0;
  for (std::size_t s = 0; s < r.size(); ++s) {
    if ((r.successors(s) & ~e) == 0) out |= bit(s);
  }
  return out;
}

Mask PartitionalModel::awareness(std::size_t agent, Mask e) const {
  const auto& parts = frames_[agent].awareness;
  Mask out = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s].splits_none(e)) out |= bit(s);
  }
  return out;
}

bool operator==(const PartitionalModel& a, const PartitionalModel& b) {
  if (!(a.space() == b.space()) || a.agents() != b.agents()) return false;
  for (std::size_t i = 0; i < a.frames_.size(); ++i) {
    if (!(a.frames_[i].accessibility == b.frames_[i].accessibility)) return false;
    if (a.frames_[i].awareness != b.frames_[i].awareness) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void check_event(const Model& m, const Event& e) {
  if (e.universe() != m.space().size()) throw ModelError("event does not belong to the model's state space");
}

}  // namespace

Event knowledge_event(const Model& m, std::string_view agent, const Event& e) {
  check_event(m, e);
  return m.space().event(m.knowledge(m.agent_index(agent), e.bits()));
}

Event awareness_event(const Model& m, std::string_view agent, const Event& e) {
  check_event(m, e);
  return m.space().event(m.awareness(m.agent_index(agent), e.bits()));
}

Event common_knowledge_event(const Model& m, std::string_view agent, const Event& e) {
  check_event(m, e);
  return m.space().event(m.common_knowledge(m.agent_index(agent), e.bits()));
}

StandardModel derive_standard(const PartitionalModel& pm, std::size_t cap) { return StandardModel::tabulate(pm, cap); }

OperatorTable knowledge_table(const Relation& r) {
  require_enumerable(r.size(), kMaxEnumerableStates);
  const std::size_t events = std::size_t{1} << r.size();
  OperatorTable t(events);
  for (Mask e = 0; e < events; ++e) {
    Mask out = 0;
    for (std::size_t s = 0; s < r.size(); ++s) {
      if ((r.successors(s) & ~e) == 0) out |= bit(s);
    }
    t[e] = out;
  }
  return t;
}

const Model& as_model(const AnyModel& m) {
  return std::visit([](const auto& x) -> const Model& { return x; }, m);
}

// ---------------------------------------------------------------------------
// Built-in models

StandardModel builtin_dlr3() {
  StateSpace space({"alpha", "w1", "w2"});
  const std::size_t alpha = 0, w1 = 1, w2 = 2;
  Relation r = Relation::from_edges(3, {{alpha, alpha}, {alpha, w1}, {alpha, w2}, {w1, w1}, {w2, w2}});
  AgentOperators ops;
  ops.knowledge = knowledge_table(r);
  ops.awareness.resize(8);
  for (Mask f = 0; f < 8; ++f) {
    ops.awareness[f] = (has(f, w1) && !has(f, w2)) ? bit(w2) : space.all_bits();
  }
  return StandardModel(space, {"1"}, {ops});
}

PartitionalModel builtin_ring4() {
  const std::size_t n = 4;
  StateSpace space = StateSpace::numbered(n);
  Relation r = Relation::identity(n);
  for (std::size_t y = 0; y < n; ++y) r.add(0, y);
  // ~_1: {1},{2,3,4}; ~_m for m > 1: {1},{m},{the other two}.
  std::vector<Partition> parts;
  parts.emplace_back(std::vector<Mask>{bit(0), bit(1) | bit(2) | bit(3)}, n);
  for (std::size_t m = 1; m < n; ++m) {
    const Mask rest = full_mask(n) & ~bit(0) & ~bit(m);
    parts.emplace_back(std::vector<Mask>{bit(0), bit(m), rest}, n);
  }
  return PartitionalModel(space, {"1"}, {AgentFrame{r, parts}});
}

PartitionalModel builtin_trade5() {
  const std::size_t n = 5;
  StateSpace space = StateSpace::numbered(n);
  // Alice: 1 R x iff x <= 3; 5 R x iff x >= 3; otherwise w R x iff w = x.
  Relation alice = Relation::identity(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (x <= 2) alice.add(0, x);
    if (x >= 2) alice.add(4, x);
  }
  auto blocks = [n](std::vector<std::vector<std::size_t>> cells) {
    std::vector<Mask> out;
    for (const auto& c : cells) {
      Mask m = 0;
      for (std::size_t s : c) m |= bit(s - 1);
      out.push_back(m);
    }
    return Partition(std::move(out), n);
  };
  const Partition a12 = blocks({{1}, {2, 3}, {4}, {5}});
  const Partition a45 = blocks({{1}, {2}, {3, 4}, {5}});
  const Partition discrete = Partition::discrete(n);
  AgentFrame a{alice, {a12, a12, discrete, a45, a45}};
  AgentFrame b{Relation::all(n), std::vector<Partition>(n, discrete)};
  return PartitionalModel(space, {"A", "B"}, {a, b});
}

std::vector<std::string> builtin_names() { return {"M_DLR3", "M_RING4", "M_TRADE5"}; }

AnyModel builtin(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "M_DLR3") return builtin_dlr3();
  if (upper == "M_RING4") return builtin_ring4();
  if (upper == "M_TRADE5") return builtin_trade5();
  throw Error("unknown built-in model '" + std::string(name) + "'");
}

}  // namespace aware
