#ifndef AWARE_SRC_TEXT_SCAN_HPP_
#define AWARE_SRC_TEXT_SCAN_HPP_

// Tokenizer shared by the model and scenario file readers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aware/error.hpp"
#include "aware/models.hpp"
#include "aware/statespace.hpp"

namespace aware::detail {

struct Token {
  enum class Kind { kWord, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t offset = 0;
  std::size_t line = 1;
};

/// Words are maximal runs of characters other than whitespace and
/// `{ } : ; , = @ #`, cut before "->". Punctuation tokens are those
/// characters and "->". `#` runs to end of line.
std::vector<Token> tokenize(std::string_view text);

class Scanner {
 public:
  explicit Scanner(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::kEnd; }
  bool at_punct(std::string_view p) const;
  bool at_word(std::string_view w) const;
  bool accept_punct(std::string_view p);
  void expect_punct(std::string_view p);
  void expect_word(std::string_view w);
  std::string word(std::string_view what);

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// `{a b c}` with labels from `space`.
Mask read_set(Scanner& s, const StateSpace& space);
std::size_t read_state(Scanner& s, const StateSpace& space);
/// `all`, `identity`, or a list of `a->b` edges over the identity.
Relation read_relation_body(Scanner& s, const StateSpace& space);

}  // namespace aware::detail

#endif  // AWARE_SRC_TEXT_SCAN_HPP_
