#ifndef AWARE_FORMULA_HPP_
#define AWARE_FORMULA_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace aware {

/// Node kinds of the epistemic language. `U_i phi` has no node of its own:
/// it is built (and parsed) as `Not(Aware(i, phi))`, and re-sugared on output.
enum class Op {
  kLetter,
  kTrue,
  kFalse,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kKnow,        // K_i
  kAware,       // A_i
  kCommonKnow,  // CK_i
  kForall,
  kExists,
};

/// Immutable formula tree with shared structure. Copies are cheap.
///
/// `name()` holds the letter for kLetter, the agent for the modal operators,
/// and the bound letter for the quantifiers.
class Formula {
 public:
  /// The constant `true`.
  Formula();

  static Formula letter(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula knows(std::string agent, Formula f);
  static Formula aware(std::string agent, Formula f);
  static Formula unaware(std::string agent, Formula f);
  static Formula common_knowledge(std::string agent, Formula f);
  static Formula forall(std::string letter, Formula f);
  static Formula exists(std::string letter, Formula f);

  Op op() const;
  const std::string& name() const;
  std::size_t arity() const;
  /// Sole child of unary nodes, left child of binary nodes.
  const Formula& child() const;
  const Formula& lhs() const { return child(); }
  const Formula& rhs() const;

  bool is_modal() const;
  bool is_quantifier() const;
  bool is_binary() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Structural total order, usable as a map key.
  friend bool operator<(const Formula& a, const Formula& b);

  std::size_t hash() const;
  std::size_t size() const;
  std::size_t depth() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula make(Op op, std::string name, const Formula* lhs, const Formula* rhs);

  std::shared_ptr<const Node> node_;
};

/// Parses the ASCII surface syntax. Throws ParseError with a byte offset.
///
///   formula := iff ; iff := imp ('<->' imp)* ; imp := or ('->' imp)? ;
///   or := and ('|' and)* ; and := unary ('&' unary)* ;
///   unary := '~' unary | ('K_'|'A_'|'U_'|'CK_') agent unary
///          | ('forall'|'exists') ident '.' unary | atom ;
///   atom := 'true' | 'false' | ident | '(' formula ')'
Formula parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(render(f)) == f.
std::string render(const Formula& f);

struct LetterInventory {
  std::set<std::string> free;
  std::set<std::string> bound;
  std::set<std::string> agents;
};

LetterInventory letters(const Formula& f);

/// Simultaneously renames agent indices; agents absent from `renaming` stay.
Formula rename_agents(const Formula& f, const std::map<std::string, std::string>& renaming);

/// Replaces free occurrences of letters. No capture avoidance: callers
/// substitute closed formulas or letters not bound in `f`.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& replacement);

/// (~K_agent)^n f with n >= 1.
Formula iterated_not_knows(const std::string& agent, const Formula& f, int n);

}  // namespace aware

template <>
struct std::hash<aware::Formula> {
  std::size_t operator()(const aware::Formula& f) const noexcept { return f.hash(); }
};

#endif  // AWARE_FORMULA_HPP_
