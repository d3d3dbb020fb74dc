#include "aware/statespace.hpp"

#include <set>

#include "aware/error.hpp"

namespace aware {

Event::Event(Mask bits, std::size_t universe) : bits_(bits), universe_(static_cast<std::uint32_t>(universe)) {
  if (universe > kMaxStates) throw ModelError("event universe exceeds 64 states");
  if ((bits & ~full_mask(universe)) != 0) throw ModelError("event has members outside its space");
}

bool Event::subset_of(const Event& other) const {
  if (universe_ != other.universe_) throw ModelError("events belong to different state spaces");
  return (bits_ & ~other.bits_) == 0;
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

Event operator&(const Event& a, const Event& b) { return combine(SetOp::kIntersect, a, b); }
Event operator|(const Event& a, const Event& b) { return combine(SetOp::kUnion, a, b); }

Event complement(const Event& e) { return e.complement(); }

Event combine(SetOp op, const Event& a, const Event& b) {
  if (a.universe() != b.universe()) throw ModelError("events belong to different state spaces");
  return Event(op == SetOp::kIntersect ? (a.bits() & b.bits()) : (a.bits() | b.bits()), a.universe());
}

StateSpace::StateSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw ModelError("state space must have at least one state");
  if (labels.size() > kMaxStates) throw ModelError("state space exceeds 64 states");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ModelError("empty state label");
    if (!seen.insert(l).second) throw ModelError("duplicate state label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

StateSpace StateSpace::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return StateSpace(std::move(labels));
}

std::optional<std::size_t> StateSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t StateSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ModelError("unknown state '" + std::string(label) + "'");
}

Event StateSpace::event_of(std::initializer_list<std::string_view> members) const {
  Mask m = 0;
  for (auto l : members) m |= bit(index_of(l));
  return event(m);
}

Event StateSpace::event_of(const std::vector<std::string>& members) const {
  Mask m = 0;
  for (const auto& l : members) m |= bit(index_of(l));
  return event(m);
}

void require_enumerable(std::size_t size, std::size_t cap) {
  if (size > cap || size > kMaxEnumerableStates) {
    throw CapExceeded("state space of size " + std::to_string(size) + " exceeds the event enumeration cap of " +
                      std::to_string(cap));
  }
}

std::vector<Event> StateSpace::enumerate_events(std::size_t cap) const {
  require_enumerable(size(), cap);
  std::vector<Event> out;
  out.reserve(std::size_t{1} << size());
  const Mask count = Mask{1} << size();
  for (Mask m = 0; m < count; ++m) out.emplace_back(m, size());
  return out;
}

std::string StateSpace::format(const Event& e) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t s : e.members()) {
    if (!first) out += ' ';
    out += label(s);
    first = false;
  }
  return out + "}";
}

}  // namespace aware
