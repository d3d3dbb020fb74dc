#include "text_scan.hpp"

#include <cctype>

namespace aware::detail {

namespace {

bool is_punct(char c) {
  switch (c) {
    case '{': case '}': case ':': case ';': case ',': case '=': case '@': case '#':
      return true;
    default:
      return false;
  }
}

std::string describe(const Token& t) {
  return t.kind == Token::Kind::kEnd ? std::string("end of input") : "'" + t.text + "'";
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::kPunct, "->", i, line});
      i += 2;
    } else if (is_punct(c)) {
      out.push_back({Token::Kind::kPunct, std::string(1, c), i, line});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && !is_punct(text[i]) &&
             !(text[i] == '-' && i + 1 < text.size() && text[i + 1] == '>')) {
        ++i;
      }
      out.push_back({Token::Kind::kWord, std::string(text.substr(start, i - start)), start, line});
    }
  }
  out.push_back({Token::Kind::kEnd, "", text.size(), line});
  return out;
}

const Token& Scanner::peek(std::size_t ahead) const {
  const std::size_t at = pos_ + ahead;
  return at < tokens_.size() ? tokens_[at] : tokens_.back();
}

Token Scanner::next() {
  Token t = peek();
  if (t.kind != Token::Kind::kEnd) ++pos_;
  return t;
}

bool Scanner::at_punct(std::string_view p) const {
  return peek().kind == Token::Kind::kPunct && peek().text == p;
}

bool Scanner::at_word(std::string_view w) const { return peek().kind == Token::Kind::kWord && peek().text == w; }

bool Scanner::accept_punct(std::string_view p) {
  if (!at_punct(p)) return false;
  next();
  return true;
}

void Scanner::expect_punct(std::string_view p) {
  if (!accept_punct(p)) fail("expected '" + std::string(p) + "', found " + describe(peek()));
}

void Scanner::expect_word(std::string_view w) {
  if (!at_word(w)) fail("expected '" + std::string(w) + "', found " + describe(peek()));
  next();
}

std::string Scanner::word(std::string_view what) {
  if (peek().kind != Token::Kind::kWord) fail("expected " + std::string(what) + ", found " + describe(peek()));
  return next().text;
}

void Scanner::fail(const std::string& message) const { fail_at(peek(), message); }

void Scanner::fail_at(const Token& t, const std::string& message) const {
  throw ParseError(message, t.offset, t.line);
}

std::size_t read_state(Scanner& s, const StateSpace& space) {
  const Token t = s.peek();
  const std::string label = s.word("a state label");
  if (auto idx = space.find(label)) return *idx;
  s.fail_at(t, "unknown state '" + label + "'");
}

Mask read_set(Scanner& s, const StateSpace& space) {
  s.expect_punct("{");
  Mask m = 0;
  while (!s.accept_punct("}")) {
    s.accept_punct(",");
    if (s.at_punct("}")) continue;
    m |= bit(read_state(s, space));
  }
  return m;
}

Relation read_relation_body(Scanner& s, const StateSpace& space) {
  const std::size_t n = space.size();
  if (s.at_word("all")) {
    s.next();
    return Relation::all(n);
  }
  if (s.at_word("identity")) {
    s.next();
    return Relation::identity(n);
  }
  Relation r = Relation::identity(n);
  while (s.peek().kind == Token::Kind::kWord && s.peek(1).kind == Token::Kind::kPunct &&
         s.peek(1).text == "->") {
    const std::size_t from = read_state(s, space);
    s.expect_punct("->");
    r.add(from, read_state(s, space));
  }
  return r;
}

}  // namespace aware::detail
