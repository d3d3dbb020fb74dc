#ifndef AWARE_ANALYSIS_HPP_
#define AWARE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aware/formula.hpp"
#include "aware/models.hpp"
#include "aware/semantics.hpp"

namespace aware {

// ---------------------------------------------------------------------------
// DLR axiom reports

struct SchemaVerdict {
  std::string schema;  // "nPlausibility(3)" for the parametrised schema
  std::string agent;
  bool holds = false;
  std::optional<Refutation> witness;
};

struct DLRReport {
  std::size_t state = 0;
  std::vector<SchemaVerdict> verdicts;

  bool all_hold() const;
  const SchemaVerdict* find(std::string_view schema, std::string_view agent) const;
};

/// Plausibility, KU-Introspection, AU-Introspection and nPlausibility(1..max_n)
/// at `state`, per agent.
DLRReport dlr_report(const Model& m, std::size_t state, int max_n, const EvalOptions& options = {});

/// First event (bitmask order) the agent is unaware of at `state`.
std::optional<Event> unawareness_witness(const Model& m, std::size_t state, std::string_view agent,
                                         std::size_t cap = kDefaultEventCap);

// ---------------------------------------------------------------------------
// Extensions of knowledge models

/// <Omega, k> for a single agent.
class KnowledgeModel {
 public:
  KnowledgeModel(StateSpace space, OperatorTable knowledge, std::string agent = "1");
  static KnowledgeModel from_relation(StateSpace space, const Relation& r, std::string agent = "1");

  const StateSpace& space() const { return space_; }
  const std::string& agent() const { return agent_; }
  const OperatorTable& table() const { return knowledge_; }
  Mask knowledge(Mask e) const { return knowledge_[e]; }

  /// <Omega, k, a> with the given awareness table.
  StandardModel with_awareness(OperatorTable awareness) const;

 private:
  StateSpace space_;
  OperatorTable knowledge_;
  std::string agent_;
};

/// The knowledge operator of one agent of `m`.
KnowledgeModel knowledge_part(const Model& m, std::string_view agent, std::size_t cap = kDefaultEventCap);

struct DLRExtension {
  StandardModel model;
  /// The event F of the construction; a(e) = a(F) = -F, a(G) = Omega otherwise.
  Event auxiliary;
};

/// First F (bitmask order) with alpha in F and in (-k)^j(F) for j = 1..depth,
/// where depth = max(2, n). Empty when alpha fails the same chain for e
/// itself, or no such F exists.
std::optional<Event> extension_event(const KnowledgeModel& km, std::size_t alpha, const Event& e,
                                     std::optional<int> n = std::nullopt);

/// Extension of `km` in which Plausibility, KU- and AU-Introspection (and,
/// with n, j-Plausibility for j = 1..n) hold at alpha and alpha is unaware
/// of e; empty when none exists. Throws HypothesisViolated unless
/// Anti-Necessitation is valid at alpha.
std::optional<DLRExtension> extend_to_dlr(const KnowledgeModel& km, std::size_t alpha, const Event& e,
                                          std::optional<int> n = std::nullopt, const EvalOptions& options = {});

/// As extend_to_dlr, additionally validating CK-Plausibility,
/// CK-KU-Introspection and CK-AU-Introspection at alpha. Throws
/// HypothesisViolated unless Necessitation and Anti-Necessitation are
/// valid on km.
std::optional<DLRExtension> extend_to_dlr_ck(const KnowledgeModel& km, std::size_t alpha, const Event& e,
                                             std::optional<int> n = std::nullopt, const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// Automorphisms and coherence

/// Permutation of state indices: state x maps to image[x].
struct Automorphism {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image[x]; }
  bool is_identity() const;
  /// (this o other)(x) = this(other(x)).
  Automorphism after(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

inline constexpr std::size_t kMaxAutomorphismStates = 10;

bool is_automorphism(const PartitionalModel& pm, const Automorphism& f);
/// All automorphisms in lexicographic order of their images; the identity
/// comes first. Throws CapExceeded above kMaxAutomorphismStates states.
std::vector<Automorphism> automorphisms(const PartitionalModel& pm);

struct CoherencePair {
  std::string agent;
  std::size_t y = 0;
  std::size_t z = 0;
};

struct CoherenceWitness {
  CoherencePair pair;
  Automorphism f;
};

struct CoherenceResult {
  bool coherent = false;
  std::vector<CoherenceWitness> witnesses;
  /// The first related pair with no suitable automorphism.
  std::optional<CoherencePair> failure;
};

/// For every agent i and y ~^i_x z: an automorphism f with f(y) = z and
/// f(w) ~^i_x w for all w.
CoherenceResult is_coherent(const PartitionalModel& pm, std::size_t state);

// ---------------------------------------------------------------------------
// Bounded countermodel search

enum class SearchMode { kExhaustive, kRandom };

struct SearchOptions {
  std::size_t max_states = 3;
  SearchMode mode = SearchMode::kExhaustive;
  /// Models to examine; 0 means unlimited (exhaustive mode only).
  std::uint64_t budget = 0;
  /// Only accept refutations at states where the DLR axioms hold.
  bool require_dlr = false;
  EvalOptions eval;
};

struct Countermodel {
  PartitionalModel model;
  std::size_t state;
  Valuation valuation;
  std::uint64_t examined;
};

/// Partitional model and state refuting `f`. Models carry the formula's
/// agents ("1" when it mentions none). Exhaustive mode walks sizes
/// 1..max_states, preorders in enumerate_preorders order, then per-state
/// partitions as an odometer over enumerate_partitions; the first
/// refutation in that order is returned. Random mode draws `budget` models
/// from `seed`.
std::optional<Countermodel> countermodel_search(const Formula& f, const SearchOptions& options, std::uint64_t seed);

}  // namespace aware

#endif  // AWARE_ANALYSIS_HPP_
