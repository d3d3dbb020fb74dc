#include "aware/dlr_model.hpp"

#include "aware/error.hpp"

namespace aware {

bool dlr_axioms_hold(const Model& m, std::size_t state, const EvalOptions& options) {
  for (const char* name : {"Plausibility", "KU-Introspection", "AU-Introspection"}) {
    if (!schema_check(m, schema(name), state, options)) return false;
  }
  return true;
}

DLRPartitionalModel::DLRPartitionalModel(PartitionalModel model, std::size_t distinguished, const EvalOptions& options)
    : model_(std::move(model)), distinguished_(distinguished) {
  if (distinguished_ >= model_.space().size()) throw ModelError("distinguished state out of range");
  for (const char* name : {"Plausibility", "KU-Introspection", "AU-Introspection"}) {
    if (auto failure = find_schema_failure(model_, schema(name), distinguished_, std::nullopt, options)) {
      throw ModelError(std::string(name) + " fails at " + model_.space().label(distinguished_) + " for agent '" +
                       failure->agents.front() + "'");
    }
  }
}

}  // namespace aware
