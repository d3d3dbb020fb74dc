#ifndef AWARE_GENERATORS_HPP_
#define AWARE_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aware/models.hpp"

namespace aware {

/// Largest space for which all preorders are enumerated.
inline constexpr std::size_t kMaxPreorderStates = 5;

/// Every reflexive-transitive relation on n states, each once, ordered by
/// the first digraph (off-diagonal bitmask ascending) whose closure yields
/// it. Throws CapExceeded above kMaxPreorderStates.
std::vector<Relation> enumerate_preorders(std::size_t n);

/// Every partition of n states, in lexicographic order of restricted-growth
/// strings ({0,...,0} first, the discrete partition last).
std::vector<Partition> enumerate_partitions(std::size_t n);

using Rng = std::mt19937_64;

/// Uniform in [0, bound); portable across standard libraries.
inline std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

/// Closure of a random digraph where each off-diagonal edge is present
/// with probability `edge_percent`/100.
Relation random_preorder(Rng& rng, std::size_t n, unsigned edge_percent = 25);
Partition random_partition(Rng& rng, std::size_t n);
PartitionalModel random_partitional_model(Rng& rng, std::size_t n, const std::vector<std::string>& agents);
/// Operator tables drawn uniformly from all maps on events.
StandardModel random_standard_model(Rng& rng, std::size_t n, const std::vector<std::string>& agents);

}  // namespace aware

#endif  // AWARE_GENERATORS_HPP_
