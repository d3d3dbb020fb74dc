#include "aware/semantics.hpp"

#include <functional>

#include "aware/error.hpp"

namespace aware {

const Event* Valuation::find(std::string_view letter) const {
  auto it = entries_.find(letter);
  return it == entries_.end() ? nullptr : &it->second;
}

const Event& Valuation::at(std::string_view letter) const {
  if (const Event* e = find(letter)) return *e;
  throw Error("valuation does not assign letter '" + std::string(letter) + "'");
}

// ---------------------------------------------------------------------------
// CompiledFormula

CompiledFormula::CompiledFormula(const Formula& f, const Model& m, const EvalOptions& options) : model_(&m) {
  const LetterInventory inv = letters(f);
  free_letters_.assign(inv.free.begin(), inv.free.end());
  std::map<std::string, std::vector<int>> scope;
  for (const auto& l : free_letters_) scope[l].push_back(slots_++);
  root_ = compile(f, scope);
  if (!inv.bound.empty()) require_enumerable(m.space().size(), options.event_cap);
}

int CompiledFormula::compile(const Formula& f, std::map<std::string, std::vector<int>>& scope) {
  Node node{f.op()};
  switch (f.op()) {
    case Op::kLetter:
      node.slot = scope.at(f.name()).back();
      break;
    case Op::kTrue:
    case Op::kFalse:
      break;
    case Op::kForall:
    case Op::kExists: {
      node.slot = slots_++;
      scope[f.name()].push_back(node.slot);
      node.lhs = compile(f.child(), scope);
      scope[f.name()].pop_back();
      break;
    }
    default:
      if (f.is_modal()) node.agent = model_->agent_index(f.name());
      node.lhs = compile(f.child(), scope);
      if (f.is_binary()) node.rhs = compile(f.rhs(), scope);
      break;
  }
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

Mask CompiledFormula::evaluate(std::span<const Mask> free_values) const {
  std::vector<Mask> env(static_cast<std::size_t>(slots_), 0);
  for (std::size_t i = 0; i < free_letters_.size(); ++i) env[i] = free_values[i];
  return eval(root_, env);
}

Mask CompiledFormula::eval(int index, std::vector<Mask>& env) const {
  const Node& n = nodes_[static_cast<std::size_t>(index)];
  const Mask all = model_->space().all_bits();
  switch (n.op) {
    case Op::kLetter:
      return env[static_cast<std::size_t>(n.slot)];
    case Op::kTrue:
      return all;
    case Op::kFalse:
      return 0;
    case Op::kNot:
      return ~eval(n.lhs, env) & all;
    case Op::kAnd:
      return eval(n.lhs, env) & eval(n.rhs, env);
    case Op::kOr:
      return eval(n.lhs, env) | eval(n.rhs, env);
    case Op::kImplies:
      return (~eval(n.lhs, env) & all) | eval(n.rhs, env);
    case Op::kIff:
      return ~(eval(n.lhs, env) ^ eval(n.rhs, env)) & all;
    case Op::kKnow:
      return model_->knowledge(n.agent, eval(n.lhs, env));
    case Op::kAware:
      return model_->awareness(n.agent, eval(n.lhs, env));
    case Op::kCommonKnow:
      return model_->common_knowledge(n.agent, eval(n.lhs, env));
    case Op::kForall:
    case Op::kExists: {
      const bool universal = n.op == Op::kForall;
      const auto slot = static_cast<std::size_t>(n.slot);
      const Mask saved = env[slot];
      Mask acc = universal ? all : 0;
      for (Mask e = 0;; ++e) {
        env[slot] = e;
        const Mask value = eval(n.lhs, env);
        acc = universal ? (acc & value) : (acc | value);
        if (acc == (universal ? Mask{0} : all) || e == all) break;
      }
      env[slot] = saved;
      return acc;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

Event evaluate(const Model& m, const Valuation& v, const Formula& f, const EvalOptions& options) {
  CompiledFormula c(f, m, options);
  std::vector<Mask> values;
  for (const auto& l : c.free_letters()) {
    const Event& e = v.at(l);
    if (e.universe() != m.space().size()) throw ModelError("valuation event for '" + l + "' is outside the space");
    values.push_back(e.bits());
  }
  return m.space().event(c.evaluate(values));
}

std::optional<Refutation> refute(const Model& m, const Formula& f, std::optional<std::size_t> state,
                                 const EvalOptions& options) {
  const std::size_t n = m.space().size();
  if (state && *state >= n) throw ModelError("state index out of range");
  CompiledFormula c(f, m, options);
  const std::size_t letters = c.free_letters().size();
  if (letters > 0) {
    require_enumerable(n, options.event_cap);
    const std::size_t bits = n * letters;
    if (!options.force && (bits >= 64 || (std::uint64_t{1} << bits) > options.max_assignments)) {
      throw CapExceeded("validity check needs 2^" + std::to_string(bits) + " valuations, over the guard of " +
                        std::to_string(options.max_assignments) + "; force to run anyway");
    }
    if (bits >= 64) throw CapExceeded("too many valuations to enumerate");
  }
  const Mask all = m.space().all_bits();
  const Mask target = state ? bit(*state) : all;
  std::vector<Mask> values(letters, 0);
  while (true) {
    const Mask ext = c.evaluate(values);
    if ((ext & target) != target) {
      Refutation r;
      for (std::size_t i = 0; i < letters; ++i) r.valuation.set(c.free_letters()[i], m.space().event(values[i]));
      r.state = state ? *state : static_cast<std::size_t>(std::countr_zero(~ext & all));
      return r;
    }
    // Odometer: last letter varies fastest.
    std::size_t i = letters;
    while (i > 0) {
      --i;
      if (values[i] != all) {
        ++values[i];
        break;
      }
      values[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (letters == 0) return std::nullopt;
  }
}

bool valid_at(const Model& m, std::size_t state, const Formula& f, const EvalOptions& options) {
  return !refute(m, f, state, options).has_value();
}

bool valid_on(const Model& m, const Formula& f, const EvalOptions& options) {
  return !refute(m, f, std::nullopt, options).has_value();
}

// ---------------------------------------------------------------------------
// Schema registry

namespace {

struct SchemaEntry {
  const char* name;
  const char* pattern;
  int agents;
};

const std::vector<SchemaEntry>& registry() {
  static const std::vector<SchemaEntry> entries = {
      {"Plausibility", "U_i p -> ~K_i p & ~K_i ~K_i p", 1},
      {"KU-Introspection", "~K_i U_i p", 1},
      {"AU-Introspection", "U_i p -> U_i U_i p", 1},
      {"Necessitation", "K_i true", 1},
      {"Monotonicity", "K_i (p & q) -> K_i p & K_i q", 1},
      {"WeakNecessitation", "K_i p -> K_i true", 1},
      {"Distribution", "K_i p & K_i q -> K_i (p & q)", 1},
      {"AntiNecessitation", "~K_i false", 1},
      {"Reflexivity", "K_i p -> p", 1},
      {"PositiveIntrospection", "K_i p -> K_i K_i p", 1},
      {"AS", "A_i ~p -> A_i p", 1},
      {"AC", "A_i (p & q) -> A_i p & A_i q", 1},
      {"A-4ij", "A_i p -> A_i A_j p", 2},
      {"AK-4", "A_i p -> A_i K_j p", 2},
      {"CK-Plausibility", "A_i p -> CK_i (U_i p -> ~K_i p & ~K_i ~K_i p)", 1},
      {"CK-KU-Introspection", "A_i p -> CK_i ~K_i U_i p", 1},
      {"CK-AU-Introspection", "A_i p -> CK_i (U_i p -> U_i U_i p)", 1},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& schema_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    out.emplace_back("nPlausibility");
    return out;
  }();
  return names;
}

AxiomSchema schema(std::string_view name, std::optional<int> n) {
  if (name == "nPlausibility") {
    if (!n || *n < 1) throw Error("nPlausibility needs a parameter n >= 1");
    const Formula p = Formula::letter("p");
    return AxiomSchema{"nPlausibility", Formula::implication(Formula::unaware("i", p), iterated_not_knows("i", p, *n)),
                       {"i"}, n};
  }
  for (const auto& e : registry()) {
    if (name == e.name) {
      AxiomSchema s{e.name, parse(e.pattern), {"i"}, std::nullopt};
      if (e.agents == 2) s.agent_params.push_back("j");
      return s;
    }
  }
  throw Error("unknown axiom schema '" + std::string(name) + "'");
}

Formula instantiate(const AxiomSchema& s, const std::vector<std::string>& agents) {
  if (agents.size() != s.agent_params.size()) throw Error("schema " + s.name + " needs " +
                                                          std::to_string(s.agent_params.size()) + " agent(s)");
  std::map<std::string, std::string> renaming;
  for (std::size_t i = 0; i < agents.size(); ++i) renaming[s.agent_params[i]] = agents[i];
  return rename_agents(s.pattern, renaming);
}

std::optional<SchemaFailure> find_schema_failure(const Model& m, const AxiomSchema& s, std::optional<std::size_t> state,
                                                 std::optional<std::string> only_agent, const EvalOptions& options) {
  if (only_agent) m.agent_index(*only_agent);
  const auto& agents = m.agents();
  std::vector<std::size_t> tuple(s.agent_params.size(), 0);
  std::function<std::optional<SchemaFailure>(std::size_t)> walk = [&](std::size_t pos) -> std::optional<SchemaFailure> {
    if (pos == tuple.size()) {
      std::vector<std::string> names;
      for (std::size_t i : tuple) names.push_back(agents[i]);
      if (only_agent && names.front() != *only_agent) return std::nullopt;
      if (auto r = refute(m, instantiate(s, names), state, options)) return SchemaFailure{names, *r};
      return std::nullopt;
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
      tuple[pos] = i;
      if (auto f = walk(pos + 1)) return f;
    }
    return std::nullopt;
  };
  return walk(0);
}

bool schema_check(const Model& m, const AxiomSchema& s, std::optional<std::size_t> state, const EvalOptions& options) {
  return !find_schema_failure(m, s, state, std::nullopt, options).has_value();
}

bool schema_check(const Model& m, std::string_view name, std::optional<std::size_t> state, std::optional<int> n,
                  const EvalOptions& options) {
  return schema_check(m, schema(name, n), state, options);
}

}  // namespace aware
