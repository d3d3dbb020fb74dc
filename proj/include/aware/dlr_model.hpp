#ifndef AWARE_DLR_MODEL_HPP_
#define AWARE_DLR_MODEL_HPP_

#include <cstddef>

#include "aware/models.hpp"
#include "aware/semantics.hpp"

namespace aware {

/// Plausibility, KU-Introspection and AU-Introspection valid at `state`
/// for every agent of the model.
bool dlr_axioms_hold(const Model& m, std::size_t state, const EvalOptions& options = {});

/// A partitional model with a distinguished state at which the three DLR
/// axioms hold for every agent.
class DLRPartitionalModel {
 public:
  /// Throws ModelError if some DLR axiom fails at `distinguished`.
  DLRPartitionalModel(PartitionalModel model, std::size_t distinguished, const EvalOptions& options = {});

  const PartitionalModel& model() const { return model_; }
  std::size_t distinguished() const { return distinguished_; }

 private:
  PartitionalModel model_;
  std::size_t distinguished_;
};

}  // namespace aware

#endif  // AWARE_DLR_MODEL_HPP_
