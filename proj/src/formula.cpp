#include "aware/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>
#include <vector>

#include "aware/error.hpp"

namespace aware {

struct Formula::Node {
  Node(Op o, std::string n, Formula l, Formula r)
      : op(o), name(std::move(n)), lhs(std::move(l)), rhs(std::move(r)) {
    std::size_t h = std::hash<int>{}(static_cast<int>(op));
    h ^= std::hash<std::string>{}(name) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    size = 1;
    depth = 0;
    for (const Formula* c : {&lhs, &rhs}) {
      if (!c->node_) continue;
      h ^= c->node_->hash + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      size += c->node_->size;
      depth = std::max(depth, c->node_->depth + 1);
    }
    hash = h;
  }

  Op op;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
};

namespace {

int arity_of(Op op) {
  switch (op) {
    case Op::kLetter:
    case Op::kTrue:
    case Op::kFalse:
      return 0;
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
    case Op::kIff:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() {
  static const Formula kTop = make(Op::kTrue, "", nullptr, nullptr);
  node_ = kTop.node_;
}

Formula Formula::make(Op op, std::string name, const Formula* lhs, const Formula* rhs) {
  return Formula(std::make_shared<const Node>(op, std::move(name),
                                              lhs ? *lhs : Formula(std::shared_ptr<const Node>()),
                                              rhs ? *rhs : Formula(std::shared_ptr<const Node>())));
}

Formula Formula::letter(std::string name) { return make(Op::kLetter, std::move(name), nullptr, nullptr); }
Formula Formula::top() { return Formula(); }
Formula Formula::bottom() {
  static const Formula kBottom = make(Op::kFalse, "", nullptr, nullptr);
  return kBottom;
}
Formula Formula::negation(Formula f) { return make(Op::kNot, "", &f, nullptr); }
Formula Formula::conjunction(Formula lhs, Formula rhs) { return make(Op::kAnd, "", &lhs, &rhs); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return make(Op::kOr, "", &lhs, &rhs); }
Formula Formula::implication(Formula lhs, Formula rhs) { return make(Op::kImplies, "", &lhs, &rhs); }
Formula Formula::biconditional(Formula lhs, Formula rhs) { return make(Op::kIff, "", &lhs, &rhs); }
Formula Formula::knows(std::string agent, Formula f) { return make(Op::kKnow, std::move(agent), &f, nullptr); }
Formula Formula::aware(std::string agent, Formula f) { return make(Op::kAware, std::move(agent), &f, nullptr); }
Formula Formula::unaware(std::string agent, Formula f) { return negation(aware(std::move(agent), std::move(f))); }
Formula Formula::common_knowledge(std::string agent, Formula f) {
  return make(Op::kCommonKnow, std::move(agent), &f, nullptr);
}
Formula Formula::forall(std::string letter, Formula f) { return make(Op::kForall, std::move(letter), &f, nullptr); }
Formula Formula::exists(std::string letter, Formula f) { return make(Op::kExists, std::move(letter), &f, nullptr); }

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
std::size_t Formula::arity() const { return static_cast<std::size_t>(arity_of(node_->op)); }
const Formula& Formula::child() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }

bool Formula::is_modal() const {
  return node_->op == Op::kKnow || node_->op == Op::kAware || node_->op == Op::kCommonKnow;
}
bool Formula::is_quantifier() const { return node_->op == Op::kForall || node_->op == Op::kExists; }
bool Formula::is_binary() const { return arity_of(node_->op) == 2; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.op != y.op || x.size != y.size || x.name != y.name) return false;
  const int n = arity_of(x.op);
  if (n >= 1 && !(x.lhs == y.lhs)) return false;
  if (n == 2 && !(x.rhs == y.rhs)) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return x.op < y.op;
  if (x.name != y.name) return x.name < y.name;
  const int n = arity_of(x.op);
  if (n >= 1) {
    if (x.lhs < y.lhs) return true;
    if (y.lhs < x.lhs) return false;
  }
  if (n == 2) return x.rhs < y.rhs;
  return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok {
  kEnd,
  kIdent,
  kModal,  // text = operator ("K", "A", "U", "CK"), agent = index
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kLParen,
  kRParen,
  kDot,
  kTrue,
  kFalse,
  kForall,
  kExists,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::string agent;
  std::size_t pos = 0;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (c == '~') {
      t.kind = Tok::kNot;
      ++i;
    } else if (c == '&') {
      t.kind = Tok::kAnd;
      ++i;
    } else if (c == '|') {
      t.kind = Tok::kOr;
      ++i;
    } else if (c == '(') {
      t.kind = Tok::kLParen;
      ++i;
    } else if (c == ')') {
      t.kind = Tok::kRParen;
      ++i;
    } else if (c == '.') {
      t.kind = Tok::kDot;
      ++i;
    } else if (s.substr(i, 2) == "->") {
      t.kind = Tok::kImplies;
      i += 2;
    } else if (s.substr(i, 3) == "<->") {
      t.kind = Tok::kIff;
      i += 3;
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      std::size_t prefix = 0;
      for (const char* op : {"CK_", "K_", "A_", "U_"}) {
        std::string_view p(op);
        if (word.size() > p.size() && word.compare(0, p.size(), p) == 0) {
          prefix = p.size();
          break;
        }
      }
      if (prefix > 0) {
        t.kind = Tok::kModal;
        t.text = word.substr(0, prefix - 1);
        t.agent = word.substr(prefix);
      } else if (word == "true") {
        t.kind = Tok::kTrue;
      } else if (word == "false") {
        t.kind = Tok::kFalse;
      } else if (word == "forall") {
        t.kind = Tok::kForall;
      } else if (word == "exists") {
        t.kind = Tok::kExists;
      } else if (std::isdigit(static_cast<unsigned char>(word[0]))) {
        throw ParseError("proposition letter may not start with a digit: '" + word + "'", t.pos);
      } else {
        t.kind = Tok::kIdent;
        t.text = std::move(word);
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

const char* describe(Tok k) {
  switch (k) {
    case Tok::kEnd: return "end of input";
    case Tok::kIdent: return "letter";
    case Tok::kModal: return "modal operator";
    case Tok::kNot: return "'~'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImplies: return "'->'";
    case Tok::kIff: return "'<->'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kDot: return "'.'";
    case Tok::kTrue: return "'true'";
    case Tok::kFalse: return "'false'";
    case Tok::kForall: return "'forall'";
    case Tok::kExists: return "'exists'";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::kEnd) {
      throw ParseError(std::string("unexpected ") + describe(peek().kind), peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::kIff)) f = Formula::biconditional(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::kImplies)) return Formula::implication(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::kOr)) f = Formula::disjunction(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::kAnd)) f = Formula::conjunction(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNot:
        return Formula::negation(parse_unary());
      case Tok::kModal: {
        Formula body = parse_unary();
        if (t.text == "K") return Formula::knows(t.agent, body);
        if (t.text == "A") return Formula::aware(t.agent, body);
        if (t.text == "U") return Formula::unaware(t.agent, body);
        return Formula::common_knowledge(t.agent, body);
      }
      case Tok::kForall:
      case Tok::kExists: {
        const Token& var = next();
        if (var.kind != Tok::kIdent) {
          throw ParseError(std::string("expected bound letter, found ") + describe(var.kind), var.pos);
        }
        const Token& dot = next();
        if (dot.kind != Tok::kDot) {
          throw ParseError(std::string("expected '.', found ") + describe(dot.kind), dot.pos);
        }
        Formula body = parse_unary();
        return t.kind == Tok::kForall ? Formula::forall(var.text, body) : Formula::exists(var.text, body);
      }
      case Tok::kTrue:
        return Formula::top();
      case Tok::kFalse:
        return Formula::bottom();
      case Tok::kIdent:
        return Formula::letter(t.text);
      case Tok::kLParen: {
        Formula f = parse_iff();
        const Token& close = next();
        if (close.kind != Tok::kRParen) {
          throw ParseError(std::string("expected ')', found ") + describe(close.kind), close.pos);
        }
        return f;
      }
      default:
        throw ParseError(std::string("unexpected ") + describe(t.kind), t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering

// Binding strength; larger binds tighter.
int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::kIff: return 1;
    case Op::kImplies: return 2;
    case Op::kOr: return 3;
    case Op::kAnd: return 4;
    case Op::kLetter:
    case Op::kTrue:
    case Op::kFalse: return 6;
    default: return 5;
  }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  const bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.op()) {
    case Op::kLetter:
      out += f.name();
      break;
    case Op::kTrue:
      out += "true";
      break;
    case Op::kFalse:
      out += "false";
      break;
    case Op::kNot:
      if (f.child().op() == Op::kAware) {
        out += "U_" + f.child().name() + ' ';
        render_into(f.child().child(), 5, out);
      } else {
        out += '~';
        render_into(f.child(), 5, out);
      }
      break;
    case Op::kKnow:
    case Op::kAware:
    case Op::kCommonKnow: {
      const char* op = f.op() == Op::kKnow ? "K_" : f.op() == Op::kAware ? "A_" : "CK_";
      out += op + f.name() + ' ';
      render_into(f.child(), 5, out);
      break;
    }
    case Op::kForall:
    case Op::kExists:
      out += (f.op() == Op::kForall ? "forall " : "exists ") + f.name() + ". ";
      render_into(f.child(), 5, out);
      break;
    case Op::kAnd:
      render_into(f.lhs(), 4, out);
      out += " & ";
      render_into(f.rhs(), 5, out);
      break;
    case Op::kOr:
      render_into(f.lhs(), 3, out);
      out += " | ";
      render_into(f.rhs(), 4, out);
      break;
    case Op::kImplies:
      render_into(f.lhs(), 3, out);
      out += " -> ";
      render_into(f.rhs(), 2, out);
      break;
    case Op::kIff:
      render_into(f.lhs(), 1, out);
      out += " <-> ";
      render_into(f.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

void collect(const Formula& f, std::multiset<std::string>& bound_scope, LetterInventory& inv) {
  switch (f.op()) {
    case Op::kLetter:
      if (!bound_scope.count(f.name())) inv.free.insert(f.name());
      return;
    case Op::kTrue:
    case Op::kFalse:
      return;
    case Op::kForall:
    case Op::kExists: {
      inv.bound.insert(f.name());
      auto it = bound_scope.insert(f.name());
      collect(f.child(), bound_scope, inv);
      bound_scope.erase(it);
      return;
    }
    default:
      if (f.is_modal()) inv.agents.insert(f.name());
      collect(f.child(), bound_scope, inv);
      if (f.is_binary()) collect(f.rhs(), bound_scope, inv);
      return;
  }
}

Formula rebuild(const Formula& f, const Formula& a, const Formula& b) {
  switch (f.op()) {
    case Op::kNot: return Formula::negation(a);
    case Op::kAnd: return Formula::conjunction(a, b);
    case Op::kOr: return Formula::disjunction(a, b);
    case Op::kImplies: return Formula::implication(a, b);
    case Op::kIff: return Formula::biconditional(a, b);
    case Op::kKnow: return Formula::knows(f.name(), a);
    case Op::kAware: return Formula::aware(f.name(), a);
    case Op::kCommonKnow: return Formula::common_knowledge(f.name(), a);
    case Op::kForall: return Formula::forall(f.name(), a);
    case Op::kExists: return Formula::exists(f.name(), a);
    default: return f;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

LetterInventory letters(const Formula& f) {
  LetterInventory inv;
  std::multiset<std::string> scope;
  collect(f, scope, inv);
  return inv;
}

Formula rename_agents(const Formula& f, const std::map<std::string, std::string>& renaming) {
  if (f.arity() == 0) return f;
  Formula a = rename_agents(f.child(), renaming);
  Formula b = f.is_binary() ? rename_agents(f.rhs(), renaming) : Formula();
  if (f.is_modal()) {
    auto it = renaming.find(f.name());
    const std::string& agent = it == renaming.end() ? f.name() : it->second;
    if (f.op() == Op::kKnow) return Formula::knows(agent, a);
    if (f.op() == Op::kAware) return Formula::aware(agent, a);
    return Formula::common_knowledge(agent, a);
  }
  return rebuild(f, a, b);
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& replacement) {
  if (f.op() == Op::kLetter) {
    auto it = replacement.find(f.name());
    return it == replacement.end() ? f : it->second;
  }
  if (f.arity() == 0) return f;
  if (f.is_quantifier() && replacement.count(f.name())) {
    auto inner = replacement;
    inner.erase(f.name());
    return rebuild(f, substitute(f.child(), inner), Formula());
  }
  Formula a = substitute(f.child(), replacement);
  Formula b = f.is_binary() ? substitute(f.rhs(), replacement) : Formula();
  return rebuild(f, a, b);
}

Formula iterated_not_knows(const std::string& agent, const Formula& f, int n) {
  Formula out = f;
  for (int i = 0; i < n; ++i) out = Formula::negation(Formula::knows(agent, out));
  return out;
}

}  // namespace aware
