// Command-line front end: `aware <verb> [options]`.
//
// Exit status: 0 holds / accepted / found, 1 fails / refuted / none,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aware/analysis.hpp"
#include "aware/calculus.hpp"
#include "aware/decision.hpp"
#include "aware/error.hpp"
#include "aware/formula.hpp"
#include "aware/known_results.hpp"
#include "aware/model_file.hpp"
#include "aware/models.hpp"
#include "aware/semantics.hpp"

namespace {

using aware::Event;
using aware::StateSpace;
using nlohmann::json;

struct Report {
  int status = 0;
  json data = json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

std::string format_valuation(const StateSpace& sp, const aware::Valuation& v) {
  std::string out;
  for (const auto& [letter, e] : v.entries()) {
    if (!out.empty()) out += ", ";
    out += letter + " = " + sp.format(e);
  }
  return out.empty() ? "(no letters)" : out;
}

json valuation_json(const StateSpace& sp, const aware::Valuation& v) {
  json j = json::object();
  for (const auto& [letter, e] : v.entries()) j[letter] = sp.format(e);
  return j;
}

json refutation_json(const StateSpace& sp, const aware::Refutation& r) {
  return {{"state", sp.label(r.state)}, {"valuation", valuation_json(sp, r.valuation)}};
}

std::string describe_refutation(const StateSpace& sp, const aware::Refutation& r) {
  return "false at " + sp.label(r.state) + " under " + format_valuation(sp, r.valuation);
}

std::optional<std::size_t> state_arg(const StateSpace& sp, const std::string& label) {
  if (label.empty()) return std::nullopt;
  return sp.index_of(label);
}

std::size_t required_state(const aware::ModelFile& mf, const std::string& label) {
  if (!label.empty()) return mf.base().space().index_of(label);
  if (mf.distinguished) return *mf.distinguished;
  throw aware::Error("--state is required: the model has no distinguished state");
}

const aware::PartitionalModel& partitional(const aware::ModelFile& mf) {
  if (const auto* pm = std::get_if<aware::PartitionalModel>(&mf.model)) return *pm;
  throw aware::Error("this command needs a partitional model");
}

std::string single_agent(const aware::Model& m, const std::string& agent) {
  if (!agent.empty()) {
    m.agent_index(agent);
    return agent;
  }
  if (m.agents().size() != 1) throw aware::Error("--agent is required for models with several agents");
  return m.agents().front();
}

// ---------------------------------------------------------------------------

struct Args {
  std::string model;
  std::string formula;
  std::string valuation;
  std::string state;
  std::string name;
  std::string agent;
  std::string event;
  std::string file;
  std::string scenario;
  std::string act;
  std::optional<int> n;
  bool ck = false;
  std::size_t max_states = 3;
  bool random = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool require_dlr = false;
};

Report cmd_parse(const Args& a) {
  Report r;
  const aware::Formula f = aware::parse(a.formula);
  const aware::LetterInventory inv = aware::letters(f);
  r.data = {{"formula", aware::render(f)}, {"free", inv.free}, {"bound", inv.bound}, {"agents", inv.agents},
            {"size", f.size()}, {"depth", f.depth()}};
  r.line(aware::render(f));
  return r;
}

Report cmd_eval(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const aware::Formula f = aware::parse(a.formula);
  aware::Valuation v;
  if (!a.valuation.empty()) {
    v = mf.valuation(a.valuation);
  } else if (!mf.valuations.empty()) {
    v = mf.valuations.front().second;
  }
  const StateSpace& sp = mf.base().space();
  const Event e = aware::evaluate(mf.base(), v, f, {});
  r.data = {{"formula", aware::render(f)}, {"valuation", valuation_json(sp, v)}, {"extension", sp.format(e)}};
  r.line(sp.format(e));
  return r;
}

Report cmd_valid(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const StateSpace& sp = mf.base().space();
  const aware::Formula f = aware::parse(a.formula);
  const auto state = state_arg(sp, a.state);
  const auto refutation = aware::refute(mf.base(), f, state);
  const std::string where = state ? "at " + sp.label(*state) : std::string("on the model");
  r.status = refutation ? 1 : 0;
  r.data = {{"formula", aware::render(f)}, {"valid", !refutation}};
  if (state) r.data["state"] = sp.label(*state);
  if (refutation) {
    r.data["refutation"] = refutation_json(sp, *refutation);
    r.line("not valid " + where + ": " + describe_refutation(sp, *refutation));
  } else {
    r.line("valid " + where);
  }
  return r;
}

Report cmd_schema(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const StateSpace& sp = mf.base().space();
  const aware::AxiomSchema s = aware::schema(a.name, a.n);
  const auto state = state_arg(sp, a.state);
  const std::optional<std::string> only = a.agent.empty() ? std::nullopt : std::optional<std::string>(a.agent);
  const auto failure = aware::find_schema_failure(mf.base(), s, state, only);
  const std::string where = state ? "at " + sp.label(*state) : std::string("on the model");
  r.status = failure ? 1 : 0;
  r.data = {{"schema", s.name}, {"holds", !failure}};
  if (s.n) r.data["n"] = *s.n;
  if (state) r.data["state"] = sp.label(*state);
  if (failure) {
    r.data["agents"] = failure->agents;
    r.data["refutation"] = refutation_json(sp, failure->refutation);
    std::string agents;
    for (const auto& ag : failure->agents) agents += (agents.empty() ? "" : ",") + ag;
    r.line(s.name + " fails " + where + " for agent " + agents + ": " +
           describe_refutation(sp, failure->refutation));
  } else {
    r.line(s.name + " holds " + where);
  }
  return r;
}

Report cmd_dlr_report(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const StateSpace& sp = mf.base().space();
  const std::size_t state = required_state(mf, a.state);
  const aware::DLRReport rep = aware::dlr_report(mf.base(), state, a.n.value_or(1));
  r.status = rep.all_hold() ? 0 : 1;
  json rows = json::array();
  for (const auto& v : rep.verdicts) {
    json row = {{"schema", v.schema}, {"agent", v.agent}, {"holds", v.holds}};
    std::string text = v.schema + " agent " + v.agent + ": " + (v.holds ? "holds" : "fails");
    if (v.witness) {
      row["refutation"] = refutation_json(sp, *v.witness);
      text += " (" + describe_refutation(sp, *v.witness) + ")";
    }
    rows.push_back(row);
    r.line(text);
  }
  r.data = {{"state", sp.label(state)}, {"all_hold", rep.all_hold()}, {"verdicts", rows}};
  return r;
}

Report cmd_witness(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const StateSpace& sp = mf.base().space();
  const std::size_t state = required_state(mf, a.state);
  const std::string agent = single_agent(mf.base(), a.agent);
  const auto w = aware::unawareness_witness(mf.base(), state, agent);
  r.status = w ? 0 : 1;
  r.data = {{"state", sp.label(state)}, {"agent", agent}, {"witness", w ? json(sp.format(*w)) : json(nullptr)}};
  r.line(w ? "agent " + agent + " is unaware of " + sp.format(*w) + " at " + sp.label(state)
           : "agent " + agent + " is aware of every event at " + sp.label(state));
  return r;
}

Report cmd_extend(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const StateSpace& sp = mf.base().space();
  const std::size_t alpha = required_state(mf, a.state);
  const std::string agent = single_agent(mf.base(), a.agent);
  const Event e = aware::parse_event(sp, a.event);
  const aware::KnowledgeModel km = aware::knowledge_part(mf.base(), agent);
  std::optional<aware::DLRExtension> ext;
  try {
    ext = a.ck ? aware::extend_to_dlr_ck(km, alpha, e, a.n) : aware::extend_to_dlr(km, alpha, e, a.n);
  } catch (const aware::HypothesisViolated& h) {
    r.status = 1;
    r.data = {{"extension", nullptr}, {"hypothesis_violated", h.what()}};
    r.line(std::string("hypothesis violated: ") + h.what());
    return r;
  }
  r.status = ext ? 0 : 1;
  r.data = {{"state", sp.label(alpha)}, {"event", sp.format(e)}, {"ck", a.ck}};
  if (!ext) {
    r.data["extension"] = nullptr;
    r.line("no extension exists");
    return r;
  }
  r.data["auxiliary"] = sp.format(ext->auxiliary);
  const aware::ModelFile out{ext->model, {}, alpha};
  r.data["model"] = aware::render_model_file(out);
  r.line("F = " + sp.format(ext->auxiliary));
  r.line(aware::render_model_file(out));
  return r;
}

std::string format_permutation(const StateSpace& sp, const aware::Automorphism& f) {
  std::string out;
  for (std::size_t x = 0; x < f.image.size(); ++x) {
    if (!out.empty()) out += " ";
    out += sp.label(x) + "->" + sp.label(f(x));
  }
  return out;
}

Report cmd_automorphisms(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const aware::PartitionalModel& pm = partitional(mf);
  const StateSpace& sp = pm.space();
  const auto group = aware::automorphisms(pm);
  json list = json::array();
  for (const auto& f : group) {
    list.push_back(format_permutation(sp, f));
    r.line(format_permutation(sp, f));
  }
  r.line("order " + std::to_string(group.size()));
  r.data = {{"order", group.size()}, {"automorphisms", list}};
  return r;
}

Report cmd_coherence(const Args& a) {
  Report r;
  const aware::ModelFile mf = aware::load_model(a.model);
  const aware::PartitionalModel& pm = partitional(mf);
  const StateSpace& sp = pm.space();
  std::vector<std::size_t> states;
  if (a.state.empty()) {
    for (std::size_t s = 0; s < sp.size(); ++s) states.push_back(s);
  } else {
    states.push_back(sp.index_of(a.state));
  }
  json rows = json::array();
  for (std::size_t s : states) {
    const aware::CoherenceResult c = aware::is_coherent(pm, s);
    json row = {{"state", sp.label(s)}, {"coherent", c.coherent}};
    std::string text = sp.label(s) + ": " + (c.coherent ? "coherent" : "incoherent");
    if (c.failure) {
      row["failure"] = {{"agent", c.failure->agent}, {"y", sp.label(c.failure->y)}, {"z", sp.label(c.failure->z)}};
      text += " (no automorphism maps " + sp.label(c.failure->y) + " to " + sp.label(c.failure->z) +
              " for agent " + c.failure->agent + ")";
      r.status = 1;
    }
    rows.push_back(row);
    r.line(text);
  }
  r.data = {{"states", rows}};
  return r;
}

Report cmd_search(const Args& a) {
  Report r;
  const aware::Formula f = aware::parse(a.formula);
  aware::SearchOptions opts;
  opts.max_states = a.max_states;
  opts.mode = a.random ? aware::SearchMode::kRandom : aware::SearchMode::kExhaustive;
  opts.budget = a.budget;
  opts.require_dlr = a.require_dlr;
  const auto cm = aware::countermodel_search(f, opts, a.seed);
  r.status = cm ? 1 : 0;
  r.data = {{"formula", aware::render(f)}, {"countermodel", nullptr}};
  if (!cm) {
    r.line("no countermodel with at most " + std::to_string(a.max_states) + " states");
    return r;
  }
  const aware::ModelFile out{cm->model, {{"refuting", cm->valuation}}, cm->state};
  const StateSpace& sp = cm->model.space();
  r.data["countermodel"] = {{"state", sp.label(cm->state)},
                            {"valuation", valuation_json(sp, cm->valuation)},
                            {"examined", cm->examined},
                            {"model", aware::render_model_file(out)}};
  r.line("countermodel after " + std::to_string(cm->examined) + " models: false at " + sp.label(cm->state));
  r.line(aware::render_model_file(out));
  return r;
}

Report cmd_prove(const Args& a) {
  Report r;
  const aware::Proof proof = aware::parse_proof(aware::read_text_file(a.file));
  const aware::ProofVerdict v = aware::check_proof(proof);
  r.status = v.accepted ? 0 : 1;
  r.data = {{"accepted", v.accepted}, {"lines", proof.lines.size()}};
  if (v.accepted) {
    r.line("accepted: " + aware::render(proof.lines.empty() ? aware::Formula() : proof.lines.back().formula));
  } else {
    r.data["bad_line"] = v.bad_line;
    r.data["reason"] = v.reason;
    r.line("rejected at line " + std::to_string(v.bad_line) + ": " + v.reason);
  }
  return r;
}

Report cmd_trade(const Args& a) {
  Report r;
  const aware::ChoiceScenario sc = aware::load_scenario(a.scenario);
  const StateSpace& sp = sc.space();
  const aware::TradeReport rep = aware::trade_report(sc);
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json prefs = json::array();
    std::string text = sp.label(row.state) + ":";
    for (const auto& p : row.preferences) {
      json eu = json::object();
      for (const auto& [act, v] : p.eu) eu[act] = aware::to_string(v);
      prefs.push_back({{"agent", p.agent}, {"act", p.act}, {"strict", p.strict}, {"eu", eu}});
      text += " " + p.agent + "=" + p.act + (p.strict ? "" : "(tie)");
    }
    text += row.trade_possible ? "  trade possible" : "  no trade";
    rows.push_back({{"state", sp.label(row.state)}, {"trade_possible", row.trade_possible}, {"preferences", prefs}});
    r.line(text);
  }
  r.status = rep.trade_anywhere() ? 0 : 1;
  r.data = {{"trade_anywhere", rep.trade_anywhere()}, {"states", rows}};
  return r;
}

Report cmd_eu(const Args& a) {
  Report r;
  const aware::ChoiceScenario sc = aware::load_scenario(a.scenario);
  const StateSpace& sp = sc.space();
  const std::size_t state = sp.index_of(a.state);
  const Event info = sc.information(a.agent, state);
  const aware::Rational v = aware::conditional_eu(sc, a.act, info);
  r.data = {{"agent", a.agent}, {"state", a.state}, {"act", a.act}, {"information", sp.format(info)},
            {"eu", aware::to_string(v)}};
  r.line(aware::to_string(v));
  return r;
}

Report cmd_verify(const Args&) {
  Report r;
  json rows = json::array();
  std::size_t failed = 0;
  for (const auto& k : aware::check_known_results()) {
    if (!k.holds) ++failed;
    rows.push_back({{"topic", k.topic}, {"claim", k.claim}, {"holds", k.holds}, {"detail", k.detail}});
    r.line(std::string(k.holds ? "[ok]   " : "[FAIL] ") + k.topic + ": " + k.claim + " (" + k.detail + ")");
  }
  r.line(std::to_string(rows.size() - failed) + "/" + std::to_string(rows.size()) + " facts reproduced");
  r.status = failed == 0 ? 0 : 1;
  r.data = {{"failed", failed}, {"results", rows}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge and awareness on finite state-space models"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON object instead of text");
  Args a;
  std::function<Report(const Args&)> handler;

  auto verb = [&](const char* name, const char* help, Report (*fn)(const Args&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto model = [&](CLI::App* s) { s->add_option("--model", a.model, "Built-in name or model file")->required(); };

  CLI::App* s = verb("parse", "Parse and print a formula canonically", cmd_parse);
  s->add_option("--formula", a.formula)->required();

  s = verb("eval", "Event expressed by a formula", cmd_eval);
  model(s);
  s->add_option("--formula", a.formula)->required();
  s->add_option("--valuation", a.valuation, "Stored valuation (default: the first one)");

  s = verb("valid", "Validity at a state or on the whole model", cmd_valid);
  model(s);
  s->add_option("--formula", a.formula)->required();
  s->add_option("--state", a.state);

  s = verb("schema", "Check an axiom schema", cmd_schema);
  model(s);
  s->add_option("--name", a.name)->required();
  s->add_option("--state", a.state);
  s->add_option("--n", a.n, "Parameter of nPlausibility");
  s->add_option("--agent", a.agent);

  s = verb("dlr-report", "Plausibility, KU, AU and nPlausibility(1..n) per agent", cmd_dlr_report);
  model(s);
  s->add_option("--state", a.state);
  s->add_option("--n", a.n);

  s = verb("witness", "An event the agent is unaware of", cmd_witness);
  model(s);
  s->add_option("--state", a.state);
  s->add_option("--agent", a.agent);

  s = verb("extend-dlr", "Extend a knowledge model by awareness satisfying the DLR axioms", cmd_extend);
  model(s);
  s->add_flag("--ck", a.ck, "Also require the common-knowledge schemas");
  s->add_option("--state", a.state);
  s->add_option("--event", a.event, "Event literal such as {1 3}")->required();
  s->add_option("--n", a.n);
  s->add_option("--agent", a.agent);

  s = verb("automorphisms", "Automorphism group of a partitional model", cmd_automorphisms);
  model(s);

  s = verb("coherence", "Coherence of one or all states", cmd_coherence);
  model(s);
  s->add_option("--state", a.state);

  s = verb("search", "Bounded countermodel search over partitional models", cmd_search);
  s->add_option("--formula", a.formula)->required();
  s->add_option("--max-states", a.max_states)->required();
  s->add_flag("--random", a.random);
  s->add_option("--seed", a.seed);
  s->add_option("--budget", a.budget);
  s->add_flag("--require-dlr", a.require_dlr, "Only refute at states where the DLR axioms hold");

  s = verb("prove", "Check a proof file", cmd_prove);
  s->add_option("--file", a.file)->required();

  s = verb("trade", "Preferred acts and speculative trade per state", cmd_trade);
  s->add_option("--scenario", a.scenario, "trade5 or a scenario file")->required();

  s = verb("eu", "Conditional expected utility on the agent's information set", cmd_eu);
  s->add_option("--scenario", a.scenario)->required();
  s->add_option("--agent", a.agent)->required();
  s->add_option("--state", a.state)->required();
  s->add_option("--act", a.act)->required();

  verb("verify-paper", "Recompute every published fact about the built-in models", cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report r;
  try {
    r = handler(a);
  } catch (const aware::ParseError& e) {
    std::cerr << "error: " << e.what() << " (";
    if (e.line() > 0) std::cerr << "line " << e.line() << ", ";
    std::cerr << "offset " << e.position() << ")\n";
    return 2;
  } catch (const aware::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (as_json) {
    r.data["status"] = r.status;
    std::cout << r.data.dump(2) << '\n';
  } else {
    for (const auto& l : r.lines) std::cout << l << '\n';
  }
  return r.status;
}
