#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aware/analysis.hpp"
#include "aware/calculus.hpp"
#include "aware/decision.hpp"
#include "aware/error.hpp"
#include "aware/known_results.hpp"
#include "aware/model_file.hpp"

namespace py = pybind11;
using namespace aware;

namespace {

using Labels = std::vector<std::string>;

Labels labels_of(const StateSpace& sp, Mask e) {
  Labels out;
  for (std::size_t s = 0; s < sp.size(); ++s) {
    if (has(e, s)) out.push_back(sp.label(s));
  }
  return out;
}

Event event_of(const StateSpace& sp, const Labels& labels) {
  Mask e = 0;
  for (const auto& l : labels) e |= bit(sp.index_of(l));
  return sp.event(e);
}

const PartitionalModel& partitional(const ModelFile& mf) {
  const auto* pm = std::get_if<PartitionalModel>(&mf.model);
  if (pm == nullptr) throw Error("a partitional model is required");
  return *pm;
}

std::size_t state_of(const ModelFile& mf, const std::optional<std::string>& label) {
  if (label) return mf.base().space().index_of(*label);
  if (mf.distinguished) return *mf.distinguished;
  throw Error("no state given and the model has no distinguished state");
}

Valuation valuation_of(const ModelFile& mf, const std::map<std::string, Labels>& assignment) {
  Valuation v;
  for (const auto& [letter, labels] : assignment) v.set(letter, event_of(mf.base().space(), labels));
  return v;
}

py::dict refutation_dict(const StateSpace& sp, const Refutation& r) {
  py::dict valuation;
  for (const auto& [letter, e] : r.valuation.entries()) valuation[py::str(letter)] = labels_of(sp, e.bits());
  py::dict out;
  out["state"] = sp.label(r.state);
  out["valuation"] = valuation;
  return out;
}

}  // namespace

PYBIND11_MODULE(_aware, m) {
  m.doc() = "Knowledge and awareness on finite state-space models";

  // Later registrations are tried first.
  const auto& base = py::register_exception<Error>(m, "AwareError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("parse", [](const std::string& text) { return render(parse(text)); },
        "Canonical form of a formula.");

  py::class_<ModelFile>(m, "Model")
      .def_static("load", &load_model, py::arg("name_or_path"))
      .def_static("from_text", &parse_model_file, py::arg("text"))
      .def_property_readonly("states", [](const ModelFile& mf) { return mf.base().space().labels(); })
      .def_property_readonly("agents", [](const ModelFile& mf) { return mf.base().agents(); })
      .def_property_readonly("distinguished",
                             [](const ModelFile& mf) -> std::optional<std::string> {
                               if (!mf.distinguished) return std::nullopt;
                               return mf.base().space().label(*mf.distinguished);
                             })
      .def_property_readonly("is_partitional",
                             [](const ModelFile& mf) { return std::holds_alternative<PartitionalModel>(mf.model); })
      .def("valuation",
           [](const ModelFile& mf, const std::string& name) {
             std::map<std::string, Labels> out;
             for (const auto& [letter, e] : mf.valuation(name).entries()) {
               out[letter] = labels_of(mf.base().space(), e.bits());
             }
             return out;
           })
      .def("to_text", &render_model_file);

  m.def(
      "evaluate",
      [](const ModelFile& mf, const std::string& formula, const std::map<std::string, Labels>& valuation) {
        const Event e = evaluate(mf.base(), valuation_of(mf, valuation), parse(formula));
        return labels_of(mf.base().space(), e.bits());
      },
      py::arg("model"), py::arg("formula"), py::arg("valuation") = std::map<std::string, Labels>{},
      "States at which the formula holds.");

  m.def(
      "valid",
      [](const ModelFile& mf, const std::string& formula, const std::optional<std::string>& state) {
        const Formula f = parse(formula);
        return state ? valid_at(mf.base(), mf.base().space().index_of(*state), f) : valid_on(mf.base(), f);
      },
      py::arg("model"), py::arg("formula"), py::arg("state") = std::nullopt);

  m.def(
      "refute",
      [](const ModelFile& mf, const std::string& formula, const std::optional<std::string>& state) -> py::object {
        const std::optional<std::size_t> at =
            state ? std::optional<std::size_t>(mf.base().space().index_of(*state)) : std::nullopt;
        const auto r = refute(mf.base(), parse(formula), at);
        if (!r) return py::none();
        return refutation_dict(mf.base().space(), *r);
      },
      py::arg("model"), py::arg("formula"), py::arg("state") = std::nullopt);

  m.def("schema_names", &schema_names);
  m.def(
      "schema_check",
      [](const ModelFile& mf, const std::string& name, const std::optional<std::string>& state, std::optional<int> n) {
        const std::optional<std::size_t> at =
            state ? std::optional<std::size_t>(mf.base().space().index_of(*state)) : std::nullopt;
        return schema_check(mf.base(), name, at, n);
      },
      py::arg("model"), py::arg("name"), py::arg("state") = std::nullopt, py::arg("n") = std::nullopt);

  m.def(
      "dlr_report",
      [](const ModelFile& mf, const std::optional<std::string>& state, int max_n) {
        const DLRReport r = dlr_report(mf.base(), state_of(mf, state), max_n);
        py::list verdicts;
        for (const SchemaVerdict& v : r.verdicts) {
          py::dict d;
          d["schema"] = v.schema;
          d["agent"] = v.agent;
          d["holds"] = v.holds;
          d["witness"] = v.witness ? py::object(refutation_dict(mf.base().space(), *v.witness)) : py::none();
          verdicts.append(d);
        }
        py::dict out;
        out["state"] = mf.base().space().label(r.state);
        out["all_hold"] = r.all_hold();
        out["verdicts"] = verdicts;
        return out;
      },
      py::arg("model"), py::arg("state") = std::nullopt, py::arg("max_n") = 1);

  m.def(
      "witness",
      [](const ModelFile& mf, const std::string& state, const std::string& agent) -> std::optional<Labels> {
        const auto w = unawareness_witness(mf.base(), mf.base().space().index_of(state), agent);
        if (!w) return std::nullopt;
        return labels_of(mf.base().space(), w->bits());
      },
      py::arg("model"), py::arg("state"), py::arg("agent"));

  m.def(
      "extend_dlr",
      [](const ModelFile& mf, const std::optional<std::string>& state, const Labels& event, std::optional<int> n,
         bool ck, const std::string& agent) -> std::optional<std::string> {
        const KnowledgeModel km = knowledge_part(mf.base(), agent);
        const std::size_t alpha = state_of(mf, state);
        const Event e = event_of(km.space(), event);
        const auto ext = ck ? extend_to_dlr_ck(km, alpha, e, n) : extend_to_dlr(km, alpha, e, n);
        if (!ext) return std::nullopt;
        return render_model_file(ModelFile{ext->model, {}, alpha});
      },
      py::arg("model"), py::arg("state") = std::nullopt, py::arg("event") = Labels{}, py::arg("n") = std::nullopt,
      py::arg("ck") = false, py::arg("agent") = "1", "Model-file text of the extension, or None.");

  m.def(
      "automorphisms",
      [](const ModelFile& mf) {
        const PartitionalModel& pm = partitional(mf);
        std::vector<Labels> out;
        for (const Automorphism& f : automorphisms(pm)) {
          Labels images;
          for (std::size_t x : f.image) images.push_back(pm.space().label(x));
          out.push_back(images);
        }
        return out;
      },
      "Each automorphism as the images of the states in order.");

  m.def(
      "coherent",
      [](const ModelFile& mf, const std::string& state) {
        const PartitionalModel& pm = partitional(mf);
        return is_coherent(pm, pm.space().index_of(state)).coherent;
      },
      py::arg("model"), py::arg("state"));

  m.def(
      "search",
      [](const std::string& formula, std::size_t max_states, bool random, std::uint64_t seed, std::uint64_t budget,
         bool require_dlr) -> py::object {
        SearchOptions options;
        options.max_states = max_states;
        options.mode = random ? SearchMode::kRandom : SearchMode::kExhaustive;
        options.budget = budget;
        options.require_dlr = require_dlr;
        const auto c = countermodel_search(parse(formula), options, seed);
        if (!c) return py::none();
        py::dict out = refutation_dict(c->model.space(), Refutation{c->valuation, c->state});
        out["model"] = render_model_file(ModelFile{c->model, {{"refuting", c->valuation}}, c->state});
        out["examined"] = c->examined;
        return out;
      },
      py::arg("formula"), py::arg("max_states") = 3, py::arg("random") = false, py::arg("seed") = 0,
      py::arg("budget") = 0, py::arg("require_dlr") = false);

  m.def(
      "check_proof",
      [](const std::string& text) {
        const ProofVerdict v = check_proof(parse_proof(text));
        return py::make_tuple(v.accepted, v.bad_line, v.reason);
      },
      py::arg("text"), "(accepted, bad_line, reason) for proof-file text.");

  m.def(
      "trade",
      [](const std::string& scenario) {
        const ChoiceScenario sc = load_scenario(scenario);
        py::list rows;
        for (const TradeRow& row : trade_report(sc).rows) {
          py::dict prefs;
          for (const Preference& p : row.preferences) prefs[py::str(p.agent)] = p.act;
          py::dict d;
          d["state"] = sc.space().label(row.state);
          d["preferred"] = prefs;
          d["trade_possible"] = row.trade_possible;
          rows.append(d);
        }
        return rows;
      },
      py::arg("scenario"));

  m.def(
      "_eu",
      [](const std::string& scenario, const std::string& agent, const std::string& state, const std::string& act) {
        const ChoiceScenario sc = load_scenario(scenario);
        return to_string(conditional_eu(sc, act, sc.information(agent, sc.space().index_of(state))));
      },
      py::arg("scenario"), py::arg("agent"), py::arg("state"), py::arg("act"));

  m.def("verify_paper", [] {
    py::list out;
    for (const KnownResult& r : check_known_results()) {
      py::dict d;
      d["topic"] = r.topic;
      d["claim"] = r.claim;
      d["holds"] = r.holds;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  });
}
