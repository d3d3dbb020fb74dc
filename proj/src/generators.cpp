#include "aware/generators.hpp"

#include <set>

#include "aware/error.hpp"

namespace aware {

std::vector<Relation> enumerate_preorders(std::size_t n) {
  if (n == 0 || n > kMaxPreorderStates) {
    throw CapExceeded("preorder enumeration supports 1.." + std::to_string(kMaxPreorderStates) + " states");
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  std::vector<Relation> out;
  std::set<std::vector<Mask>> seen;
  const std::uint64_t digraphs = std::uint64_t{1} << slots.size();
  for (std::uint64_t g = 0; g < digraphs; ++g) {
    Relation r = Relation::identity(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((g >> k) & 1U) r.add(slots[k].first, slots[k].second);
    }
    if (!r.is_transitive()) r = r.reflexive_transitive_closure();
    if (seen.insert(r.rows()).second) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  // rgs[i] <= 1 + max(rgs[0..i-1]); advance like an odometer from the right.
  while (true) {
    out.push_back(Partition::from_labels(rgs));
    std::size_t i = n;
    bool advanced = false;
    while (i > 1) {
      --i;
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

Relation random_preorder(Rng& rng, std::size_t n, unsigned edge_percent) {
  Relation r = Relation::identity(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && below(rng, 100) < edge_percent) r.add(x, y);
    }
  }
  return r.reflexive_transitive_closure();
}

Partition random_partition(Rng& rng, std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = below(rng, n);
  return Partition::from_labels(labels);
}

PartitionalModel random_partitional_model(Rng& rng, std::size_t n, const std::vector<std::string>& agents) {
  std::vector<AgentFrame> frames;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    AgentFrame f{random_preorder(rng, n, static_cast<unsigned>(below(rng, 60))), {}};
    for (std::size_t s = 0; s < n; ++s) f.awareness.push_back(random_partition(rng, n));
    frames.push_back(std::move(f));
  }
  return PartitionalModel(StateSpace::numbered(n), agents, std::move(frames));
}

StandardModel random_standard_model(Rng& rng, std::size_t n, const std::vector<std::string>& agents) {
  const std::size_t events = std::size_t{1} << n;
  const Mask all = full_mask(n);
  std::vector<AgentOperators> ops(agents.size());
  for (auto& o : ops) {
    o.knowledge.resize(events);
    o.awareness.resize(events);
    for (std::size_t e = 0; e < events; ++e) {
      o.knowledge[e] = rng() & all;
      o.awareness[e] = rng() & all;
    }
  }
  return StandardModel(StateSpace::numbered(n), agents, std::move(ops));
}

}  // namespace aware
