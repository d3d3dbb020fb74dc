#ifndef AWARE_MODEL_FILE_HPP_
#define AWARE_MODEL_FILE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aware/models.hpp"
#include "aware/semantics.hpp"

namespace aware {

/// A model plus the named valuations and distinguished state stored with it.
struct ModelFile {
  AnyModel model;
  std::vector<std::pair<std::string, Valuation>> valuations;
  std::optional<std::size_t> distinguished;

  const Model& base() const { return as_model(model); }
  /// Throws Error for unknown names.
  const Valuation& valuation(std::string_view name) const;
};

/// Model file text:
///
///   states: s1 s2 ...
///   agent <id> {
///     R: a->b ... | all | identity
///     partition @<state>: {..} {..} ...
///   }
///   agent <id> {
///     k-table: {..} -> {..} ...
///     a-table: {..} -> {..} ...
///   }
///   valuation <name>: p = {..}, q = {..}
///   distinguished: <state>
///
/// Agents with R are partitional: R is closed reflexively and transitively,
/// states without a partition line get the discrete partition. Agents with
/// tables are standard and must map every event. All agents of a file are of
/// one kind. `#` comments; `;` may separate items. Throws ParseError (with
/// offset and line) or ModelError.
ModelFile parse_model_file(std::string_view text);

/// Canonical text accepted by parse_model_file.
std::string render_model_file(const ModelFile& mf);

/// A built-in model with its stored extras: m_dlr3 carries distinguished
/// state alpha and valuation e (p = {alpha w1}); m_ring4 distinguished state
/// 1; m_trade5 distinguished state 1. Case-insensitive.
ModelFile builtin_model_file(std::string_view name);

/// A built-in name, or else a path to a model file. Throws Error.
ModelFile load_model(const std::string& name_or_path);

/// Event literal such as `{1 3 4}` over the labels of `space`. Throws
/// ParseError.
Event parse_event(const StateSpace& space, std::string_view text);

/// Reads a whole file. Throws Error.
std::string read_text_file(const std::string& path);

}  // namespace aware

#endif  // AWARE_MODEL_FILE_HPP_
