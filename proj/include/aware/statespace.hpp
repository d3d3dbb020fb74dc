#ifndef AWARE_STATESPACE_HPP_
#define AWARE_STATESPACE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aware {

/// Raw subset of state indices; bit i set iff state i is a member.
using Mask = std::uint64_t;

/// Hard limit imposed by the Mask representation.
inline constexpr std::size_t kMaxStates = 64;
/// Default cap on |Omega| for anything that enumerates all 2^|Omega| events.
inline constexpr std::size_t kDefaultEventCap = 16;
/// Absolute ceiling for event enumeration, whatever cap a caller passes.
inline constexpr std::size_t kMaxEnumerableStates = 30;

inline constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }

/// A subset of a finite state space. Equality is extensional; events of
/// spaces of different sizes never compare equal and refuse to combine.
class Event {
 public:
  Event() = default;
  Event(Mask bits, std::size_t universe);

  Mask bits() const { return bits_; }
  std::size_t universe() const { return universe_; }

  bool contains(std::size_t state) const { return has(bits_, state); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(universe_); }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool subset_of(const Event& other) const;
  std::vector<std::size_t> members() const;

  Event complement() const { return Event(~bits_ & full_mask(universe_), universe_); }
  Event operator-() const { return complement(); }
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);

  friend bool operator==(const Event& a, const Event& b) = default;

 private:
  Mask bits_ = 0;
  std::uint32_t universe_ = 0;
};

enum class SetOp { kIntersect, kUnion };

Event complement(const Event& e);
/// Throws ModelError when the events belong to spaces of different sizes.
Event combine(SetOp op, const Event& a, const Event& b);

/// Ordered, labelled set of states. Copies share the label storage.
class StateSpace {
 public:
  /// Throws ModelError on an empty list, duplicate labels, or more than
  /// kMaxStates states.
  explicit StateSpace(std::vector<std::string> labels);
  /// States labelled "1".."n".
  static StateSpace numbered(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t state) const { return (*labels_)[state]; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws ModelError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  Mask all_bits() const { return full_mask(size()); }
  Event empty_event() const { return Event(0, size()); }
  Event full_event() const { return Event(all_bits(), size()); }
  Event singleton(std::size_t state) const { return Event(bit(state), size()); }
  Event event(Mask bits) const { return Event(bits, size()); }
  Event event_of(std::initializer_list<std::string_view> members) const;
  Event event_of(const std::vector<std::string>& members) const;

  /// All 2^|Omega| events, bitmask-ascending. Throws CapExceeded when
  /// size() > cap.
  std::vector<Event> enumerate_events(std::size_t cap = kDefaultEventCap) const;

  /// "{a b c}" in state order.
  std::string format(const Event& e) const;
  std::string format(Mask m) const { return format(event(m)); }

  friend bool operator==(const StateSpace& a, const StateSpace& b) { return a.labels() == b.labels(); }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Throws CapExceeded unless size <= cap.
void require_enumerable(std::size_t size, std::size_t cap);

}  // namespace aware

template <>
struct std::hash<aware::Event> {
  std::size_t operator()(const aware::Event& e) const noexcept {
    return std::hash<aware::Mask>{}(e.bits()) ^ (static_cast<std::size_t>(e.universe()) << 58);
  }
};

#endif  // AWARE_STATESPACE_HPP_
