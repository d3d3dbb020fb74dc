#include "aware/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aware/dlr_model.hpp"
#include "aware/error.hpp"
#include "aware/generators.hpp"

namespace aware {

// ---------------------------------------------------------------------------
// Reports and witnesses

bool DLRReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const SchemaVerdict& v) { return v.holds; });
}

const SchemaVerdict* DLRReport::find(std::string_view schema, std::string_view agent) const {
  for (const auto& v : verdicts) {
    if (v.schema == schema && v.agent == agent) return &v;
  }
  return nullptr;
}

DLRReport dlr_report(const Model& m, std::size_t state, int max_n, const EvalOptions& options) {
  DLRReport report;
  report.state = state;
  for (const auto& agent : m.agents()) {
    auto record = [&](const AxiomSchema& s, std::string label) {
      auto failure = find_schema_failure(m, s, state, agent, options);
      SchemaVerdict v{std::move(label), agent, !failure.has_value(), std::nullopt};
      if (failure) v.witness = failure->refutation;
      report.verdicts.push_back(std::move(v));
    };
    for (const char* name : {"Plausibility", "KU-Introspection", "AU-Introspection"}) record(schema(name), name);
    for (int n = 1; n <= max_n; ++n) record(schema("nPlausibility", n), "nPlausibility(" + std::to_string(n) + ")");
  }
  return report;
}

std::optional<Event> unawareness_witness(const Model& m, std::size_t state, std::string_view agent, std::size_t cap) {
  const std::size_t i = m.agent_index(agent);
  for (const Event& e : m.space().enumerate_events(cap)) {
    if (!has(m.awareness(i, e.bits()), state)) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Extensions

KnowledgeModel::KnowledgeModel(StateSpace space, OperatorTable knowledge, std::string agent)
    : space_(std::move(space)), knowledge_(std::move(knowledge)), agent_(std::move(agent)) {
  require_enumerable(space_.size(), kDefaultEventCap);
  if (knowledge_.size() != (std::size_t{1} << space_.size())) throw ModelError("knowledge table must cover all events");
  for (Mask m : knowledge_) {
    if ((m & ~space_.all_bits()) != 0) throw ModelError("knowledge table maps outside the space");
  }
}

KnowledgeModel KnowledgeModel::from_relation(StateSpace space, const Relation& r, std::string agent) {
  if (r.size() != space.size()) throw ModelError("relation does not match the space");
  return KnowledgeModel(std::move(space), knowledge_table(r), std::move(agent));
}

StandardModel KnowledgeModel::with_awareness(OperatorTable awareness) const {
  return StandardModel(space_, {agent_}, {AgentOperators{knowledge_, std::move(awareness)}});
}

KnowledgeModel knowledge_part(const Model& m, std::string_view agent, std::size_t cap) {
  const std::size_t i = m.agent_index(agent);
  require_enumerable(m.space().size(), cap);
  OperatorTable k(std::size_t{1} << m.space().size());
  for (Mask e = 0; e < k.size(); ++e) k[e] = m.knowledge(i, e);
  return KnowledgeModel(m.space(), std::move(k), std::string(agent));
}

namespace {

// alpha in (-k)^j(x) for every j = 1..depth.
bool in_not_known_chain(const KnowledgeModel& km, std::size_t alpha, Mask x, int depth) {
  const Mask all = km.space().all_bits();
  for (int j = 1; j <= depth; ++j) {
    x = ~km.knowledge(x) & all;
    if (!has(x, alpha)) return false;
  }
  return true;
}

int chain_depth(std::optional<int> n) {
  if (n && *n < 1) throw Error("n-Plausibility parameter must be >= 1");
  return std::max(2, n.value_or(2));
}

void check_alpha(const KnowledgeModel& km, std::size_t alpha, const Event& e) {
  if (alpha >= km.space().size()) throw ModelError("state index out of range");
  if (e.universe() != km.space().size()) throw ModelError("event does not belong to the model's state space");
}

// The knowledge model viewed as a standard model in which everything is
// attended to; only its knowledge operator matters for the hypotheses.
StandardModel knowledge_only(const KnowledgeModel& km) {
  return km.with_awareness(OperatorTable(km.table().size(), km.space().all_bits()));
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("extension postcondition failed: " + what);
}

std::optional<DLRExtension> build_extension(const KnowledgeModel& km, std::size_t alpha, const Event& e,
                                            std::optional<int> n, bool with_ck, const EvalOptions& options) {
  auto f = extension_event(km, alpha, e, n);
  if (!f) return std::nullopt;
  const Mask all = km.space().all_bits();
  OperatorTable a(km.table().size(), all);
  a[e.bits()] = ~f->bits() & all;
  a[f->bits()] = ~f->bits() & all;
  DLRExtension ext{km.with_awareness(std::move(a)), *f};

  const StandardModel& m = ext.model;
  for (const char* name : {"Plausibility", "KU-Introspection", "AU-Introspection"}) {
    verify(schema_check(m, name, alpha, std::nullopt, options), name);
  }
  for (int j = 1; j <= n.value_or(0); ++j) {
    verify(schema_check(m, "nPlausibility", alpha, j, options), "nPlausibility(" + std::to_string(j) + ")");
  }
  if (with_ck) {
    for (const char* name : {"CK-Plausibility", "CK-KU-Introspection", "CK-AU-Introspection"}) {
      verify(schema_check(m, name, alpha, std::nullopt, options), name);
    }
  }
  verify(!has(m.awareness(0, e.bits()), alpha), "alpha unaware of e");
  return ext;
}

}  // namespace

std::optional<Event> extension_event(const KnowledgeModel& km, std::size_t alpha, const Event& e, std::optional<int> n) {
  check_alpha(km, alpha, e);
  const int depth = chain_depth(n);
  if (!in_not_known_chain(km, alpha, e.bits(), depth)) return std::nullopt;
  const Mask events = Mask{1} << km.space().size();
  for (Mask f = 0; f < events; ++f) {
    if (has(f, alpha) && in_not_known_chain(km, alpha, f, depth)) return km.space().event(f);
  }
  return std::nullopt;
}

std::optional<DLRExtension> extend_to_dlr(const KnowledgeModel& km, std::size_t alpha, const Event& e,
                                          std::optional<int> n, const EvalOptions& options) {
  check_alpha(km, alpha, e);
  if (!schema_check(knowledge_only(km), "AntiNecessitation", alpha, std::nullopt, options)) {
    throw HypothesisViolated("Anti-Necessitation is not valid at " + km.space().label(alpha));
  }
  return build_extension(km, alpha, e, n, false, options);
}

std::optional<DLRExtension> extend_to_dlr_ck(const KnowledgeModel& km, std::size_t alpha, const Event& e,
                                             std::optional<int> n, const EvalOptions& options) {
  check_alpha(km, alpha, e);
  const StandardModel m = knowledge_only(km);
  if (!schema_check(m, "Necessitation", std::nullopt, std::nullopt, options)) {
    throw HypothesisViolated("Necessitation is not valid on the knowledge model");
  }
  if (!schema_check(m, "AntiNecessitation", std::nullopt, std::nullopt, options)) {
    throw HypothesisViolated("Anti-Necessitation is not valid on the knowledge model");
  }
  return build_extension(km, alpha, e, n, true, options);
}

// ---------------------------------------------------------------------------
// Automorphisms

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != i) return false;
  }
  return true;
}

Automorphism Automorphism::after(const Automorphism& other) const {
  Automorphism out{std::vector<std::size_t>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) out.image[x] = image[other.image[x]];
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out{std::vector<std::size_t>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) out.image[image[x]] = x;
  return out;
}

namespace {

// Block labels of ~^i_x for every agent i and state x.
struct PartitionLabels {
  std::vector<std::vector<std::vector<std::size_t>>> labels;  // [agent][x][y]

  explicit PartitionLabels(const PartitionalModel& pm) {
    for (std::size_t i = 0; i < pm.agents().size(); ++i) {
      auto& per_state = labels.emplace_back();
      for (std::size_t x = 0; x < pm.space().size(); ++x) per_state.push_back(pm.partition(i, x).labels());
    }
  }

  bool same(std::size_t agent, std::size_t x, std::size_t y, std::size_t z) const {
    return labels[agent][x][y] == labels[agent][x][z];
  }
};

// Checks conditions (i) and (ii) on every pair/triple that involves state
// `k` and otherwise only already-assigned states (indices < k).
bool consistent(const PartitionalModel& pm, const PartitionLabels& pl, const std::vector<std::size_t>& f,
                std::size_t k) {
  for (std::size_t i = 0; i < pm.agents().size(); ++i) {
    const Relation& r = pm.relation(i);
    for (std::size_t j = 0; j <= k; ++j) {
      if (r.related(k, j) != r.related(f[k], f[j])) return false;
      if (r.related(j, k) != r.related(f[j], f[k])) return false;
    }
    for (std::size_t x = 0; x <= k; ++x) {
      for (std::size_t y = 0; y <= k; ++y) {
        for (std::size_t z = 0; z <= k; ++z) {
          if (x != k && y != k && z != k) continue;
          if (pl.same(i, x, y, z) != pl.same(i, f[x], f[y], f[z])) return false;
        }
      }
    }
  }
  return true;
}

void extend_automorphisms(const PartitionalModel& pm, const PartitionLabels& pl, std::vector<std::size_t>& f,
                          std::vector<bool>& used, std::size_t k, std::vector<Automorphism>& out) {
  const std::size_t n = pm.space().size();
  if (k == n) {
    out.push_back(Automorphism{f});
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    f[k] = v;
    if (!consistent(pm, pl, f, k)) continue;
    used[v] = true;
    extend_automorphisms(pm, pl, f, used, k + 1, out);
    used[v] = false;
  }
}

}  // namespace

bool is_automorphism(const PartitionalModel& pm, const Automorphism& f) {
  const std::size_t n = pm.space().size();
  if (f.image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : f.image) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < pm.agents().size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (pm.relation(i).related(x, y) != pm.relation(i).related(f(x), f(y))) return false;
        for (std::size_t z = 0; z < n; ++z) {
          if (pm.partition(i, x).same_block(y, z) != pm.partition(i, f(x)).same_block(f(y), f(z))) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Automorphism> automorphisms(const PartitionalModel& pm) {
  const std::size_t n = pm.space().size();
  if (n > kMaxAutomorphismStates) {
    throw CapExceeded("automorphism search supports at most " + std::to_string(kMaxAutomorphismStates) + " states");
  }
  PartitionLabels pl(pm);
  std::vector<std::size_t> f(n, 0);
  std::vector<bool> used(n, false);
  std::vector<Automorphism> out;
  extend_automorphisms(pm, pl, f, used, 0, out);
  return out;
}

CoherenceResult is_coherent(const PartitionalModel& pm, std::size_t state) {
  if (state >= pm.space().size()) throw ModelError("state index out of range");
  const std::vector<Automorphism> group = automorphisms(pm);
  const std::size_t n = pm.space().size();
  CoherenceResult result;
  for (std::size_t i = 0; i < pm.agents().size(); ++i) {
    const Partition& cells = pm.partition(i, state);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!cells.same_block(y, z)) continue;
        CoherencePair pair{pm.agents()[i], y, z};
        auto it = std::find_if(group.begin(), group.end(), [&](const Automorphism& f) {
          if (f(y) != z) return false;
          for (std::size_t w = 0; w < n; ++w) {
            if (!cells.same_block(f(w), w)) return false;
          }
          return true;
        });
        if (it == group.end()) {
          result.failure = pair;
          return result;
        }
        result.witnesses.push_back(CoherenceWitness{pair, *it});
      }
    }
  }
  result.coherent = true;
  return result;
}

// ---------------------------------------------------------------------------
// Countermodel search

namespace {

std::optional<std::pair<std::size_t, Valuation>> refute_in(const PartitionalModel& m, const Formula& f,
                                                           const SearchOptions& options) {
  if (!options.require_dlr) {
    if (auto r = refute(m, f, std::nullopt, options.eval)) return std::make_pair(r->state, r->valuation);
    return std::nullopt;
  }
  for (std::size_t s = 0; s < m.space().size(); ++s) {
    if (!dlr_axioms_hold(m, s, options.eval)) continue;
    if (auto r = refute(m, f, s, options.eval)) return std::make_pair(s, r->valuation);
  }
  return std::nullopt;
}

std::vector<std::string> search_agents(const Formula& f) {
  const auto inv = letters(f);
  if (inv.agents.empty()) return {"1"};
  return {inv.agents.begin(), inv.agents.end()};
}

}  // namespace

std::optional<Countermodel> countermodel_search(const Formula& f, const SearchOptions& options, std::uint64_t seed) {
  if (options.max_states < 1) throw Error("max_states must be at least 1");
  const std::vector<std::string> agents = search_agents(f);
  std::uint64_t examined = 0;

  if (options.mode == SearchMode::kRandom) {
    Rng rng(seed);
    const std::uint64_t budget = options.budget == 0 ? 10000 : options.budget;
    const std::size_t max_states = std::min(options.max_states, options.eval.event_cap);
    while (examined < budget) {
      const std::size_t n = 1 + below(rng, max_states);
      PartitionalModel m = random_partitional_model(rng, n, agents);
      ++examined;
      if (auto hit = refute_in(m, f, options)) return Countermodel{std::move(m), hit->first, hit->second, examined};
    }
    return std::nullopt;
  }

  for (std::size_t n = 1; n <= options.max_states; ++n) {
    const std::vector<Relation> relations = enumerate_preorders(n);
    const std::vector<Partition> partitions = enumerate_partitions(n);
    // One digit for the relation, then one per state, per agent; the last
    // digit turns fastest.
    std::vector<std::size_t> radix;
    for (std::size_t a = 0; a < agents.size(); ++a) {
      radix.push_back(relations.size());
      for (std::size_t s = 0; s < n; ++s) radix.push_back(partitions.size());
    }
    std::vector<std::size_t> digits(radix.size(), 0);
    const StateSpace space = StateSpace::numbered(n);
    while (true) {
      if (options.budget != 0 && examined >= options.budget) return std::nullopt;
      std::vector<AgentFrame> frames;
      std::size_t d = 0;
      for (std::size_t a = 0; a < agents.size(); ++a) {
        AgentFrame frame{relations[digits[d++]], {}};
        for (std::size_t s = 0; s < n; ++s) frame.awareness.push_back(partitions[digits[d++]]);
        frames.push_back(std::move(frame));
      }
      PartitionalModel m(space, agents, std::move(frames));
      ++examined;
      if (auto hit = refute_in(m, f, options)) return Countermodel{std::move(m), hit->first, hit->second, examined};

      std::size_t k = digits.size();
      bool carried_out = true;
      while (k > 0) {
        --k;
        if (++digits[k] < radix[k]) {
          carried_out = false;
          break;
        }
        digits[k] = 0;
      }
      if (carried_out) break;
    }
  }
  return std::nullopt;
}

}  // namespace aware
