#ifndef AWARE_CALCULUS_HPP_
#define AWARE_CALCULUS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aware/formula.hpp"

namespace aware {

/// base: the calculus complete for partitional models (PL, K-K, K-T, K-4,
/// A-Neg, A-M, A-N; MP, K-RN, A-RE).
/// dlr: theorems of base plus the axioms P and AU, closed under MP only.
enum class Calculus { kBase, kDlr };

/// Metavariable and agent-variable bindings of an axiom instance.
struct Substitution {
  std::map<std::string, Formula> formulas;     // "phi", "psi"
  std::map<std::string, std::string> agents;  // "i"

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Axiom names usable in `calculus` ("PL" is accepted as an axiom name too).
std::vector<std::string> axiom_names(Calculus calculus);

/// Schema of a named axiom, over metavariables phi/psi and agent i.
/// Throws Error for names outside both calculi.
Formula axiom_pattern(std::string_view name);

/// Applies `s` to the pattern of `name`.
Formula instantiate_axiom(std::string_view name, const Substitution& s);

/// The substitution under which the named axiom yields `f`, if any.
std::optional<Substitution> match_axiom(const Formula& f, std::string_view name);

/// Maximum number of distinct Boolean atoms is_tautology_instance accepts.
inline constexpr std::size_t kMaxTautologyAtoms = 20;

/// Treats maximal modal and quantified subformulas (and letters) as atoms
/// and truth-tables the Boolean skeleton. Throws CapExceeded beyond
/// kMaxTautologyAtoms atoms.
bool is_tautology_instance(const Formula& f);

struct Justification {
  enum class Kind { kAxiom, kPL, kMP, kKRN, kARE };

  Kind kind = Kind::kPL;
  std::string axiom;                  // kAxiom
  std::optional<Substitution> given;  // kAxiom with explicit bindings
  std::size_t first = 0;              // kMP (premise phi), kKRN, kARE
  std::size_t second = 0;             // kMP (premise phi -> psi)
  std::string agent;                  // kKRN, kARE
};

struct ProofLine {
  std::size_t number = 0;  // 1-based, consecutive
  Formula formula;
  Justification justification;
};

struct Proof {
  Calculus calculus = Calculus::kBase;
  std::vector<ProofLine> lines;
};

struct ProofVerdict {
  bool accepted = false;
  std::size_t bad_line = 0;  // 1-based; 0 when accepted
  std::string reason;
};

ProofVerdict check_proof(const Proof& proof);

/// Proof file text:
///
///   calculus: base|dlr
///   n. <formula> ; <justification>
///
/// with justifications `ax NAME [key=value, ...]`, `pl`, `mp i j`,
/// `krn i agent`, `are i agent`; `#` starts a comment. Throws ParseError.
Proof parse_proof(std::string_view text);

/// Text form accepted by parse_proof.
std::string render_proof(const Proof& proof);

}  // namespace aware

#endif  // AWARE_CALCULUS_HPP_
