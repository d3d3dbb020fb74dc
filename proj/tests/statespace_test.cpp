#include "aware/statespace.hpp"

#include <set>

#include <gtest/gtest.h>

#include "aware/error.hpp"
#include "aware/generators.hpp"

namespace aware {
namespace {

const StateSpace dlr({"alpha", "w1", "w2"});

TEST(Complement, Examples) {
  EXPECT_EQ(complement(dlr.event_of({"alpha", "w1"})), dlr.event_of({"w2"}));
  EXPECT_EQ(-dlr.full_event(), dlr.empty_event());
}

TEST(Combine, Examples) {
  EXPECT_EQ(combine(SetOp::kIntersect, dlr.event_of({"alpha", "w1"}), dlr.event_of({"w1", "w2"})),
            dlr.event_of({"w1"}));
  EXPECT_EQ(combine(SetOp::kUnion, dlr.event_of({"alpha"}), dlr.event_of({"w2"})), dlr.event_of({"alpha", "w2"}));
}

TEST(Combine, SpaceMismatch) {
  const StateSpace two = StateSpace::numbered(2);
  EXPECT_THROW(combine(SetOp::kUnion, dlr.full_event(), two.full_event()), ModelError);
}

TEST(EventAlgebra, BooleanLawsOnRandomEvents) {
  Rng rng(7);
  for (int n = 0; n < 2000; ++n) {
    const std::size_t size = 1 + below(rng, 12);
    const StateSpace sp = StateSpace::numbered(size);
    const Event e = sp.event(rng() & sp.all_bits());
    const Event f = sp.event(rng() & sp.all_bits());
    const Event g = sp.event(rng() & sp.all_bits());
    const Event all = sp.full_event();
    ASSERT_EQ(-(-e), e);
    ASSERT_EQ(e & all, e);
    ASSERT_EQ(e | -e, all);
    ASSERT_EQ(e & -e, sp.empty_event());
    ASSERT_EQ(-(e & f), -e | -f);
    ASSERT_EQ(-(e | f), -e & -f);
    ASSERT_EQ(e & (f | g), (e & f) | (e & g));
    ASSERT_EQ(e | (f & g), (e | f) & (e | g));
    ASSERT_TRUE((e & f).subset_of(e));
  }
}

TEST(EnumerateEvents, CountsAndOrder) {
  const StateSpace two({"s1", "s2"});
  const std::vector<Event> events = two.enumerate_events();
  ASSERT_EQ(events.size(), 4u);
  EXPECT_EQ(events[0], two.empty_event());
  EXPECT_EQ(events[1], two.event_of({"s1"}));
  EXPECT_EQ(events[2], two.event_of({"s2"}));
  EXPECT_EQ(events[3], two.full_event());
  EXPECT_EQ(StateSpace::numbered(4).enumerate_events().size(), 16u);
}

TEST(EnumerateEvents, EachEventOnce) {
  const StateSpace sp = StateSpace::numbered(10);
  const std::vector<Event> events = sp.enumerate_events();
  std::set<Mask> seen;
  for (const Event& e : events) seen.insert(e.bits());
  EXPECT_EQ(seen.size(), events.size());
  EXPECT_EQ(events.size(), 1024u);
}

TEST(EnumerateEvents, Cap) {
  EXPECT_THROW(StateSpace::numbered(17).enumerate_events(), CapExceeded);
  EXPECT_NO_THROW(StateSpace::numbered(5).enumerate_events(5));
  EXPECT_THROW(StateSpace::numbered(6).enumerate_events(5), CapExceeded);
}

TEST(StateSpace, Validation) {
  EXPECT_THROW(StateSpace(std::vector<std::string>{}), ModelError);
  EXPECT_THROW(StateSpace({"a", "a"}), ModelError);
  EXPECT_THROW(StateSpace::numbered(65), ModelError);
  EXPECT_THROW(dlr.index_of("w3"), Error);
  EXPECT_EQ(dlr.index_of("w2"), 2u);
}

TEST(StateSpace, Format) {
  EXPECT_EQ(dlr.format(dlr.event_of({"w2", "alpha"})), "{alpha w2}");
  EXPECT_EQ(dlr.format(dlr.empty_event()), "{}");
}

}  // namespace
}  // namespace aware
