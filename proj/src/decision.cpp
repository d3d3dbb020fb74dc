#include "aware/decision.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "aware/error.hpp"
#include "aware/model_file.hpp"
#include "text_scan.hpp"

namespace aware {

using boost::multiprecision::cpp_int;

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  const cpp_int d{std::string(den)};
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational r{cpp_int{n}};
  return r / Rational{d};
}

std::string to_string(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------

ChoiceScenario::ChoiceScenario(StateSpace space, std::vector<Rational> prior, std::vector<Act> acts,
                               std::vector<ScenarioAgent> agents)
    : space_(std::move(space)), prior_(std::move(prior)), acts_(std::move(acts)), agents_(std::move(agents)) {
  const std::size_t n = space_.size();
  if (prior_.size() != n) throw ModelError("prior has " + std::to_string(prior_.size()) + " weights for " +
                                           std::to_string(n) + " states");
  Rational total = 0;
  for (const auto& w : prior_) {
    if (w < 0) throw ModelError("negative prior weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw ModelError("prior sums to " + to_string(total) + ", not 1");
  std::set<std::string> names;
  for (const auto& a : acts_) {
    if (!names.insert(a.name).second) throw ModelError("duplicate act '" + a.name + "'");
    if (a.utility.size() != n) throw ModelError("act '" + a.name + "' is not defined on every state");
  }
  names.clear();
  for (const auto& ag : agents_) {
    if (!names.insert(ag.name).second) throw ModelError("duplicate agent '" + ag.name + "'");
    if (ag.accessibility.size() != n) throw ModelError("relation of agent '" + ag.name + "' has the wrong size");
    if (!ag.accessibility.is_reflexive()) throw ModelError("relation of agent '" + ag.name + "' is not reflexive");
    for (const auto& [state, p] : ag.attention) {
      if (state >= n || p.universe() != n) throw ModelError("attention of agent '" + ag.name + "' does not fit");
    }
  }
}

const Act& ChoiceScenario::act(std::string_view name) const {
  for (const auto& a : acts_) {
    if (a.name == name) return a;
  }
  throw Error("unknown act '" + std::string(name) + "'");
}

const ScenarioAgent& ChoiceScenario::agent(std::string_view name) const {
  for (const auto& a : agents_) {
    if (a.name == name) return a;
  }
  throw UnknownAgent(std::string(name));
}

Rational ChoiceScenario::measure(Mask e) const {
  Rational m = 0;
  for (std::size_t s = 0; s < space_.size(); ++s) {
    if (has(e, s)) m += prior_[s];
  }
  return m;
}

Event ChoiceScenario::information(std::string_view agent_name, std::size_t state) const {
  return space_.event(agent(agent_name).accessibility.successors(state));
}

Partition ChoiceScenario::attention(std::string_view agent_name, std::size_t state) const {
  const ScenarioAgent& a = agent(agent_name);
  auto it = a.attention.find(state);
  return it == a.attention.end() ? Partition::discrete(space_.size()) : it->second;
}

PartitionalModel ChoiceScenario::structure() const {
  std::vector<std::string> names;
  std::vector<AgentFrame> frames;
  for (const auto& a : agents_) {
    names.push_back(a.name);
    AgentFrame f{a.accessibility, {}};
    for (std::size_t s = 0; s < space_.size(); ++s) f.awareness.push_back(attention(a.name, s));
    frames.push_back(std::move(f));
  }
  return PartitionalModel(space_, std::move(names), std::move(frames), RelationRepair::kClose);
}

std::vector<Mask> Subalgebra::events() const {
  const auto& blocks = atoms_.blocks();
  std::vector<Mask> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << blocks.size()); ++pick) {
    Mask e = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if ((pick >> b) & 1U) e |= blocks[b];
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Rational> restrict_measure(const ChoiceScenario& sc, const Subalgebra& alg, const Event& e) {
  if (e.universe() != sc.space().size() || alg.atoms().universe() != sc.space().size()) {
    throw ModelError("event or subalgebra belongs to a different space");
  }
  if (!alg.contains(e.bits())) return std::nullopt;
  return sc.measure(e.bits());
}

std::vector<Event> explicit_beliefs(const ChoiceScenario& sc, const Subalgebra& alg) {
  if (alg.atoms().blocks().size() > kMaxEnumerableStates) {
    throw CapExceeded("subalgebra has too many atoms to enumerate");
  }
  std::vector<Event> out;
  for (Mask e : alg.events()) {
    if (sc.measure(e) == 1) out.push_back(sc.space().event(e));
  }
  return out;
}

Rational conditional_eu(const ChoiceScenario& sc, std::string_view act_name, const Event& info) {
  if (info.universe() != sc.space().size()) throw ModelError("event belongs to a different space");
  const Act& act = sc.act(act_name);
  const Rational mass = sc.measure(info.bits());
  if (mass == 0) throw ModelError("conditioning event " + sc.space().format(info) + " has prior measure 0");
  Rational sum = 0;
  for (std::size_t s : info.members()) sum += sc.prior()[s] * act.utility[s];
  return sum / mass;
}

Preference preferred_act(const ChoiceScenario& sc, std::string_view agent, std::size_t state) {
  if (state >= sc.space().size()) throw Error("state index out of range");
  if (sc.acts().empty()) throw ModelError("scenario has no acts");
  const Event info = sc.information(agent, state);
  Preference p;
  p.agent = std::string(agent);
  p.state = state;
  for (const auto& a : sc.acts()) p.eu.emplace_back(a.name, conditional_eu(sc, a.name, info));
  const std::pair<std::string, Rational>* best = nullptr;
  for (const auto& entry : p.eu) {
    if (!best || entry.second > best->second || (entry.second == best->second && entry.first < best->first)) {
      best = &entry;
    }
  }
  p.act = best->first;
  p.strict = std::all_of(p.eu.begin(), p.eu.end(),
                         [&](const auto& e) { return &e == best || e.second < best->second; });
  return p;
}

bool TradeReport::trade_anywhere() const {
  return std::any_of(rows.begin(), rows.end(), [](const TradeRow& r) { return r.trade_possible; });
}

TradeReport trade_report(const ChoiceScenario& sc) {
  TradeReport report;
  for (std::size_t s = 0; s < sc.space().size(); ++s) {
    TradeRow row;
    row.state = s;
    for (const auto& a : sc.agents()) row.preferences.push_back(preferred_act(sc, a.name, s));
    for (const auto& x : row.preferences) {
      for (const auto& y : row.preferences) {
        if (x.agent != y.agent && x.strict && y.strict && x.act != y.act) row.trade_possible = true;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ChoiceScenario trade5_scenario() {
  const PartitionalModel pm = builtin_trade5();
  const std::size_t n = pm.space().size();
  std::vector<Rational> prior(n, Rational(1, 5));
  std::vector<Act> acts{
      {"f", {1, 5, 7, 5, 1}},
      {"g", {4, 4, 4, 4, 4}},
  };
  std::vector<ScenarioAgent> agents;
  for (std::size_t i = 0; i < pm.agents().size(); ++i) {
    ScenarioAgent a{pm.agents()[i], pm.relation(i), {}};
    for (std::size_t s = 0; s < n; ++s) a.attention.emplace(s, pm.partition(i, s));
    agents.push_back(std::move(a));
  }
  return ChoiceScenario(pm.space(), std::move(prior), std::move(acts), std::move(agents));
}

// ---------------------------------------------------------------------------
// Scenario files

namespace {

bool at_section(const detail::Scanner& s) {
  if (s.at_end()) return true;
  for (const char* kw : {"states", "prior", "act", "agent", "attention"}) {
    if (s.at_word(kw)) return true;
  }
  return false;
}

std::vector<Rational> read_numbers(detail::Scanner& s) {
  std::vector<Rational> out;
  while (!at_section(s)) {
    const detail::Token t = s.peek();
    const std::string w = s.word("a rational number");
    try {
      out.push_back(parse_rational(w));
    } catch (const Error& e) {
      s.fail_at(t, e.what());
    }
  }
  return out;
}

}  // namespace

ChoiceScenario parse_scenario(std::string_view text) {
  detail::Scanner s(text);
  std::optional<StateSpace> space;
  std::optional<std::vector<Rational>> prior;
  std::vector<Act> acts;
  std::vector<ScenarioAgent> agents;
  auto need_space = [&](const detail::Token& t) -> const StateSpace& {
    if (!space) s.fail_at(t, "'states:' must come first");
    return *space;
  };

  while (!s.at_end()) {
    const detail::Token head = s.peek();
    const std::string kw = s.word("a section keyword");
    if (kw == "states") {
      if (space) s.fail_at(head, "duplicate 'states:'");
      s.expect_punct(":");
      std::vector<std::string> labels;
      while (!at_section(s)) labels.push_back(s.word("a state label"));
      try {
        space.emplace(std::move(labels));
      } catch (const ModelError& e) {
        s.fail_at(head, e.what());
      }
    } else if (kw == "prior") {
      need_space(head);
      if (prior) s.fail_at(head, "duplicate 'prior:'");
      s.expect_punct(":");
      prior = read_numbers(s);
    } else if (kw == "act") {
      need_space(head);
      Act a{s.word("an act name"), {}};
      s.expect_punct(":");
      a.utility = read_numbers(s);
      acts.push_back(std::move(a));
    } else if (kw == "agent") {
      const StateSpace& sp = need_space(head);
      ScenarioAgent a{s.word("an agent name"), Relation::identity(sp.size()), {}};
      s.expect_punct(":");
      s.expect_word("R");
      s.expect_punct(":");
      a.accessibility = detail::read_relation_body(s, sp).reflexive_transitive_closure();
      agents.push_back(std::move(a));
    } else if (kw == "attention") {
      const StateSpace& sp = need_space(head);
      if (agents.empty()) s.fail_at(head, "'attention' before any agent");
      s.expect_punct("@");
      const std::size_t state = detail::read_state(s, sp);
      s.expect_punct(":");
      std::vector<Mask> blocks;
      while (s.at_punct("{")) blocks.push_back(detail::read_set(s, sp));
      try {
        agents.back().attention.insert_or_assign(state, Partition(std::move(blocks), sp.size()));
      } catch (const ModelError& e) {
        s.fail_at(head, e.what());
      }
    } else {
      s.fail_at(head, "unknown section '" + kw + "'");
    }
  }
  if (!space) throw ParseError("missing 'states:'", 0, 1);
  if (!prior) throw ParseError("missing 'prior:'", 0, 1);
  return ChoiceScenario(std::move(*space), std::move(*prior), std::move(acts), std::move(agents));
}

std::string render_scenario(const ChoiceScenario& sc) {
  const StateSpace& sp = sc.space();
  std::string out = "states:";
  for (const auto& l : sp.labels()) out += " " + l;
  out += "\nprior:";
  for (const auto& w : sc.prior()) out += " " + to_string(w);
  out += "\n";
  for (const auto& a : sc.acts()) {
    out += "act " + a.name + ":";
    for (const auto& u : a.utility) out += " " + to_string(u);
    out += "\n";
  }
  for (const auto& a : sc.agents()) {
    out += "agent " + a.name + ": R:";
    if (a.accessibility.is_all()) {
      out += " all";
    } else if (a.accessibility.is_identity()) {
      out += " identity";
    } else {
      for (std::size_t x = 0; x < sp.size(); ++x) {
        for (std::size_t y = 0; y < sp.size(); ++y) {
          if (x != y && a.accessibility.related(x, y)) out += " " + sp.label(x) + "->" + sp.label(y);
        }
      }
    }
    out += "\n";
    for (const auto& [state, p] : a.attention) {
      out += "attention @" + sp.label(state) + ":";
      for (Mask b : p.blocks()) out += " " + sp.format(b);
      out += "\n";
    }
  }
  return out;
}

ChoiceScenario load_scenario(const std::string& name_or_path) {
  std::string lower;
  for (char c : name_or_path) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "trade5" || lower == "m_trade5") return trade5_scenario();
  return parse_scenario(read_text_file(name_or_path));
}

}  // namespace aware
