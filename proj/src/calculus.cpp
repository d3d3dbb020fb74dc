#include "aware/calculus.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "aware/error.hpp"

namespace aware {

namespace {

struct AxiomEntry {
  const char* name;
  const char* pattern;
  bool base;
};

const std::vector<AxiomEntry>& axioms() {
  static const std::vector<AxiomEntry> entries = {
      {"K-K", "K_i (phi -> psi) -> (K_i phi -> K_i psi)", true},
      {"K-T", "K_i phi -> phi", true},
      {"K-4", "K_i phi -> K_i K_i phi", true},
      {"A-Neg", "A_i phi -> A_i ~phi", true},
      {"A-M", "A_i phi & A_i psi -> A_i (phi & psi)", true},
      {"A-N", "A_i true", true},
      {"P", "U_i phi -> ~K_i phi & ~K_i ~K_i phi", false},
      {"AU", "U_i phi -> U_i U_i phi", false},
  };
  return entries;
}

const AxiomEntry* find_axiom(std::string_view name) {
  for (const auto& e : axioms()) {
    if (name == e.name) return &e;
  }
  return nullptr;
}

bool match_into(const Formula& pattern, const Formula& f, Substitution& s) {
  switch (pattern.op()) {
    case Op::kLetter: {
      auto [it, inserted] = s.formulas.emplace(pattern.name(), f);
      return inserted || it->second == f;
    }
    case Op::kKnow:
    case Op::kAware:
    case Op::kCommonKnow: {
      if (f.op() != pattern.op()) return false;
      auto [it, inserted] = s.agents.emplace(pattern.name(), f.name());
      if (!inserted && it->second != f.name()) return false;
      return match_into(pattern.child(), f.child(), s);
    }
    default:
      if (f.op() != pattern.op() || f.name() != pattern.name()) return false;
      if (pattern.arity() >= 1 && !match_into(pattern.child(), f.child(), s)) return false;
      if (pattern.is_binary() && !match_into(pattern.rhs(), f.rhs(), s)) return false;
      return true;
  }
}

// Boolean skeleton: atoms are letters and maximal modal/quantified subformulas.
void collect_atoms(const Formula& f, std::map<Formula, std::size_t>& atoms) {
  switch (f.op()) {
    case Op::kTrue:
    case Op::kFalse:
      return;
    case Op::kNot:
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
    case Op::kIff:
      collect_atoms(f.child(), atoms);
      if (f.is_binary()) collect_atoms(f.rhs(), atoms);
      return;
    default:
      atoms.emplace(f, atoms.size());
      return;
  }
}

bool truth(const Formula& f, const std::map<Formula, std::size_t>& atoms, std::uint32_t row) {
  switch (f.op()) {
    case Op::kTrue: return true;
    case Op::kFalse: return false;
    case Op::kNot: return !truth(f.child(), atoms, row);
    case Op::kAnd: return truth(f.lhs(), atoms, row) && truth(f.rhs(), atoms, row);
    case Op::kOr: return truth(f.lhs(), atoms, row) || truth(f.rhs(), atoms, row);
    case Op::kImplies: return !truth(f.lhs(), atoms, row) || truth(f.rhs(), atoms, row);
    case Op::kIff: return truth(f.lhs(), atoms, row) == truth(f.rhs(), atoms, row);
    default: return (row >> atoms.at(f)) & 1U;
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

std::vector<std::string> axiom_names(Calculus calculus) {
  std::vector<std::string> out{"PL"};
  for (const auto& e : axioms()) {
    if (e.base || calculus == Calculus::kDlr) out.emplace_back(e.name);
  }
  return out;
}

Formula axiom_pattern(std::string_view name) {
  if (const AxiomEntry* e = find_axiom(name)) return parse(e->pattern);
  throw Error("unknown axiom '" + std::string(name) + "'");
}

Formula instantiate_axiom(std::string_view name, const Substitution& s) {
  const Formula pattern = axiom_pattern(name);
  const LetterInventory inv = letters(pattern);
  for (const auto& meta : inv.free) {
    if (!s.formulas.count(meta)) throw Error("axiom " + std::string(name) + " needs a binding for " + meta);
  }
  for (const auto& agent : inv.agents) {
    if (!s.agents.count(agent)) throw Error("axiom " + std::string(name) + " needs a binding for agent " + agent);
  }
  return substitute(rename_agents(pattern, s.agents), s.formulas);
}

std::optional<Substitution> match_axiom(const Formula& f, std::string_view name) {
  const Formula pattern = axiom_pattern(name);
  Substitution s;
  if (!match_into(pattern, f, s)) return std::nullopt;
  return s;
}

bool is_tautology_instance(const Formula& f) {
  std::map<Formula, std::size_t> atoms;
  collect_atoms(f, atoms);
  if (atoms.size() > kMaxTautologyAtoms) {
    throw CapExceeded("formula has " + std::to_string(atoms.size()) + " Boolean atoms; the limit is " +
                      std::to_string(kMaxTautologyAtoms));
  }
  const std::uint32_t rows = std::uint32_t{1} << atoms.size();
  for (std::uint32_t row = 0; row < rows; ++row) {
    if (!truth(f, atoms, row)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Checking

ProofVerdict check_proof(const Proof& proof) {
  const std::vector<std::string> allowed = axiom_names(proof.calculus);
  const bool dlr = proof.calculus == Calculus::kDlr;
  // base[k]: line k+1 is a theorem of the base calculus (closed under every rule).
  std::vector<bool> base;
  auto reject = [](std::size_t line, std::string why) { return ProofVerdict{false, line, std::move(why)}; };

  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    const ProofLine& line = proof.lines[k];
    const std::size_t n = k + 1;
    if (line.number != n) return reject(n, "line numbered " + std::to_string(line.number) + ", expected " +
                                               std::to_string(n));
    const Justification& j = line.justification;
    auto earlier = [&](std::size_t ref) { return ref >= 1 && ref < n; };
    bool is_base = true;

    switch (j.kind) {
      case Justification::Kind::kPL:
        if (!is_tautology_instance(line.formula)) return reject(n, "not a substitution instance of a tautology");
        break;
      case Justification::Kind::kAxiom: {
        if (std::find(allowed.begin(), allowed.end(), j.axiom) == allowed.end()) {
          return reject(n, "axiom " + j.axiom + " is not part of this calculus");
        }
        if (j.axiom == "PL") {
          if (!is_tautology_instance(line.formula)) return reject(n, "not a substitution instance of a tautology");
          break;
        }
        if (j.given) {
          Formula expected;
          try {
            expected = instantiate_axiom(j.axiom, *j.given);
          } catch (const Error& e) {
            return reject(n, e.what());
          }
          if (expected != line.formula) return reject(n, "explicit instance of " + j.axiom + " is " + render(expected));
        } else if (!match_axiom(line.formula, j.axiom)) {
          return reject(n, "not an instance of " + j.axiom);
        }
        is_base = find_axiom(j.axiom)->base;
        break;
      }
      case Justification::Kind::kMP: {
        if (!earlier(j.first) || !earlier(j.second)) return reject(n, "modus ponens must cite earlier lines");
        const Formula& minor = proof.lines[j.first - 1].formula;
        const Formula& major = proof.lines[j.second - 1].formula;
        if (major.op() != Op::kImplies) {
          return reject(n, "line " + std::to_string(j.second) + " is not an implication");
        }
        if (major.lhs() != minor) {
          return reject(n, "antecedent of line " + std::to_string(j.second) + " differs from line " +
                               std::to_string(j.first));
        }
        if (major.rhs() != line.formula) {
          return reject(n, "consequent of line " + std::to_string(j.second) + " differs from this line");
        }
        is_base = base[j.first - 1] && base[j.second - 1];
        break;
      }
      case Justification::Kind::kKRN: {
        if (!earlier(j.first)) return reject(n, "K-RN must cite an earlier line");
        if (dlr && !base[j.first - 1]) return reject(n, "K-RN applies only to theorems of the base calculus");
        if (line.formula != Formula::knows(j.agent, proof.lines[j.first - 1].formula)) {
          return reject(n, "K-RN yields K_" + j.agent + " of line " + std::to_string(j.first));
        }
        break;
      }
      case Justification::Kind::kARE: {
        if (!earlier(j.first)) return reject(n, "A-RE must cite an earlier line");
        if (dlr && !base[j.first - 1]) return reject(n, "A-RE applies only to theorems of the base calculus");
        const Formula& premise = proof.lines[j.first - 1].formula;
        if (premise.op() != Op::kIff) return reject(n, "line " + std::to_string(j.first) + " is not a biconditional");
        const Formula expected = Formula::biconditional(Formula::aware(j.agent, premise.lhs()),
                                                        Formula::aware(j.agent, premise.rhs()));
        if (line.formula != expected) return reject(n, "A-RE yields " + render(expected));
        break;
      }
    }
    base.push_back(is_base);
  }
  return ProofVerdict{true, 0, ""};
}

// ---------------------------------------------------------------------------
// Proof files

namespace {

std::size_t parse_index(const std::string& word, std::size_t offset, std::size_t line) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a line number, found '" + word + "'", offset, line);
  }
  return static_cast<std::size_t>(std::stoul(word));
}

Justification parse_justification(std::string_view text, std::size_t offset, std::size_t line) {
  const std::vector<std::string> w = words(text);
  if (w.empty()) throw ParseError("missing justification", offset, line);
  Justification j;
  const std::string& kind = w[0];
  auto arity = [&](std::size_t n) {
    if (w.size() != n + 1) throw ParseError("'" + kind + "' takes " + std::to_string(n) + " argument(s)", offset, line);
  };
  if (kind == "pl") {
    arity(0);
    j.kind = Justification::Kind::kPL;
  } else if (kind == "mp") {
    arity(2);
    j.kind = Justification::Kind::kMP;
    j.first = parse_index(w[1], offset, line);
    j.second = parse_index(w[2], offset, line);
  } else if (kind == "krn" || kind == "are") {
    arity(2);
    j.kind = kind == "krn" ? Justification::Kind::kKRN : Justification::Kind::kARE;
    j.first = parse_index(w[1], offset, line);
    j.agent = w[2];
  } else if (kind == "ax") {
    if (w.size() < 2) throw ParseError("'ax' needs an axiom name", offset, line);
    j.kind = Justification::Kind::kAxiom;
    j.axiom = w[1];
    const std::size_t name_at = text.find(w[1]);
    const std::string bindings = trim(text.substr(name_at + w[1].size()));
    if (!bindings.empty()) {
      Substitution s;
      std::size_t start = 0;
      while (start <= bindings.size()) {
        std::size_t comma = bindings.find(',', start);
        if (comma == std::string::npos) comma = bindings.size();
        const std::string item = trim(std::string_view(bindings).substr(start, comma - start));
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("binding '" + item + "' lacks '='", offset, line);
        const std::string key = trim(std::string_view(item).substr(0, eq));
        const std::string value = trim(std::string_view(item).substr(eq + 1));
        if (key == "i" || key == "j") {
          s.agents[key] = value;
        } else {
          try {
            s.formulas.emplace(key, parse(value));
          } catch (const ParseError& e) {
            throw ParseError(std::string("in binding of ") + key + ": " + e.what(), offset, line);
          }
        }
        start = comma + 1;
      }
      j.given = std::move(s);
    }
  } else {
    throw ParseError("unknown justification '" + kind + "'", offset, line);
  }
  return j;
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof proof;
  bool have_header = false;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(offset, end - offset);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (!line.empty()) {
      if (line.rfind("calculus:", 0) == 0) {
        const std::string which = trim(std::string_view(line).substr(9));
        if (which == "base") {
          proof.calculus = Calculus::kBase;
        } else if (which == "dlr") {
          proof.calculus = Calculus::kDlr;
        } else {
          throw ParseError("calculus must be 'base' or 'dlr'", offset, line_no);
        }
        if (!proof.lines.empty()) throw ParseError("calculus header must precede the proof lines", offset, line_no);
        have_header = true;
      } else {
        const std::size_t dot = line.find('.');
        if (dot == std::string::npos) throw ParseError("expected '<n>. <formula> ; <justification>'", offset, line_no);
        ProofLine pl;
        pl.number = parse_index(trim(std::string_view(line).substr(0, dot)), offset, line_no);
        const std::size_t semi = line.find(';', dot);
        if (semi == std::string::npos) throw ParseError("missing ';' before the justification", offset, line_no);
        const std::string formula_text = line.substr(dot + 1, semi - dot - 1);
        try {
          pl.formula = parse(formula_text);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), offset + raw.find(formula_text) + e.position(), line_no);
        }
        pl.justification = parse_justification(std::string_view(line).substr(semi + 1), offset, line_no);
        proof.lines.push_back(std::move(pl));
      }
    }
    offset = end + 1;
  }
  if (!have_header) throw ParseError("missing 'calculus: base|dlr' header", 0, 1);
  return proof;
}

std::string render_proof(const Proof& proof) {
  std::string out = std::string("calculus: ") + (proof.calculus == Calculus::kDlr ? "dlr" : "base") + "\n";
  for (const auto& l : proof.lines) {
    out += std::to_string(l.number) + ". " + render(l.formula) + " ; ";
    const Justification& j = l.justification;
    switch (j.kind) {
      case Justification::Kind::kPL:
        out += "pl";
        break;
      case Justification::Kind::kMP:
        out += "mp " + std::to_string(j.first) + " " + std::to_string(j.second);
        break;
      case Justification::Kind::kKRN:
        out += "krn " + std::to_string(j.first) + " " + j.agent;
        break;
      case Justification::Kind::kARE:
        out += "are " + std::to_string(j.first) + " " + j.agent;
        break;
      case Justification::Kind::kAxiom: {
        out += "ax " + j.axiom;
        if (j.given) {
          std::string sep = " ";
          for (const auto& [k, v] : j.given->formulas) {
            out += sep + k + "=" + render(v);
            sep = ", ";
          }
          for (const auto& [k, v] : j.given->agents) {
            out += sep + k + "=" + v;
            sep = ", ";
          }
        }
        break;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace aware
