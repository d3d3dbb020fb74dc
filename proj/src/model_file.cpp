#include "aware/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "aware/error.hpp"
#include "text_scan.hpp"

namespace aware {

const Valuation& ModelFile::valuation(std::string_view name) const {
  for (const auto& [n, v] : valuations) {
    if (n == name) return v;
  }
  throw Error("model has no valuation named '" + std::string(name) + "'");
}

namespace {

using detail::Scanner;
using detail::Token;

struct AgentBlock {
  std::string name;
  Token head;
  std::optional<Relation> relation;
  std::vector<std::optional<Partition>> partitions;
  std::vector<std::optional<Mask>> k_table;
  std::vector<std::optional<Mask>> a_table;
  bool has_tables = false;
};

void read_table(Scanner& s, const StateSpace& space, std::vector<std::optional<Mask>>& table, const char* what) {
  while (s.at_punct("{")) {
    const Token at = s.peek();
    const Mask from = detail::read_set(s, space);
    s.expect_punct("->");
    const Mask to = detail::read_set(s, space);
    if (table[from]) s.fail_at(at, std::string("event listed twice in ") + what);
    table[from] = to;
  }
}

AgentBlock read_agent(Scanner& s, const StateSpace& space, const Token& head) {
  const std::size_t n = space.size();
  AgentBlock a;
  a.head = head;
  a.name = s.word("an agent name");
  a.partitions.resize(n);
  s.expect_punct("{");
  while (!s.accept_punct("}")) {
    if (s.accept_punct(";")) continue;
    const Token item = s.peek();
    const std::string kw = s.word("'R', 'partition', 'k-table' or 'a-table'");
    if (kw == "R") {
      if (a.relation) s.fail_at(item, "duplicate R");
      s.expect_punct(":");
      a.relation = detail::read_relation_body(s, space);
    } else if (kw == "partition") {
      s.expect_punct("@");
      const std::size_t state = detail::read_state(s, space);
      s.expect_punct(":");
      if (a.partitions[state]) s.fail_at(item, "duplicate partition for state '" + space.label(state) + "'");
      std::vector<Mask> blocks;
      while (s.at_punct("{")) blocks.push_back(detail::read_set(s, space));
      try {
        a.partitions[state] = Partition(std::move(blocks), n);
      } catch (const ModelError& e) {
        s.fail_at(item, e.what());
      }
    } else if (kw == "k-table" || kw == "a-table") {
      require_enumerable(n, kDefaultEventCap);
      auto& table = kw == "k-table" ? a.k_table : a.a_table;
      if (!table.empty()) s.fail_at(item, "duplicate " + kw);
      table.resize(std::size_t{1} << n);
      s.expect_punct(":");
      read_table(s, space, table, kw.c_str());
      a.has_tables = true;
    } else {
      s.fail_at(item, "unknown agent item '" + kw + "'");
    }
  }
  if (a.has_tables && (a.relation || std::any_of(a.partitions.begin(), a.partitions.end(),
                                                  [](const auto& p) { return p.has_value(); }))) {
    s.fail_at(head, "agent '" + a.name + "' mixes operator tables with R/partitions");
  }
  if (!a.has_tables && !a.relation) s.fail_at(head, "agent '" + a.name + "' has neither R nor operator tables");
  return a;
}

OperatorTable complete_table(const Scanner& s, const AgentBlock& a, const std::vector<std::optional<Mask>>& table,
                             const StateSpace& space, const char* what) {
  if (table.empty()) s.fail_at(a.head, "agent '" + a.name + "' lacks " + what);
  OperatorTable out;
  for (std::size_t e = 0; e < table.size(); ++e) {
    if (!table[e]) s.fail_at(a.head, std::string(what) + " of agent '" + a.name + "' misses event " + space.format(e));
    out.push_back(*table[e]);
  }
  return out;
}

}  // namespace

ModelFile parse_model_file(std::string_view text) {
  Scanner s(text);
  std::optional<StateSpace> space;
  std::vector<AgentBlock> agents;
  std::vector<std::pair<std::string, Valuation>> valuations;
  std::optional<std::size_t> distinguished;

  while (!s.at_end()) {
    if (s.accept_punct(";")) continue;
    const Token head = s.peek();
    const std::string kw = s.word("'states', 'agent', 'valuation' or 'distinguished'");
    if (kw != "states" && !space) s.fail_at(head, "'states:' must come first");
    if (kw == "states") {
      if (space) s.fail_at(head, "duplicate 'states:'");
      s.expect_punct(":");
      std::vector<std::string> labels;
      // Section keywords are reserved and end the label list.
      while (s.peek().kind == Token::Kind::kWord && !s.at_word("agent") && !s.at_word("valuation") &&
             !s.at_word("distinguished")) {
        labels.push_back(s.next().text);
      }
      try {
        space.emplace(std::move(labels));
      } catch (const ModelError& e) {
        s.fail_at(head, e.what());
      }
    } else if (kw == "agent") {
      AgentBlock a = read_agent(s, *space, head);
      for (const auto& other : agents) {
        if (other.name == a.name) s.fail_at(head, "duplicate agent '" + a.name + "'");
      }
      agents.push_back(std::move(a));
    } else if (kw == "valuation") {
      const std::string name = s.word("a valuation name");
      for (const auto& v : valuations) {
        if (v.first == name) s.fail_at(head, "duplicate valuation '" + name + "'");
      }
      s.expect_punct(":");
      Valuation v;
      do {
        const std::string letter = s.word("a proposition letter");
        s.expect_punct("=");
        v.set(letter, space->event(detail::read_set(s, *space)));
      } while (s.accept_punct(","));
      valuations.emplace_back(name, std::move(v));
    } else if (kw == "distinguished") {
      if (distinguished) s.fail_at(head, "duplicate 'distinguished:'");
      s.expect_punct(":");
      distinguished = detail::read_state(s, *space);
    } else {
      s.fail_at(head, "unknown section '" + kw + "'");
    }
  }
  if (!space) throw ParseError("missing 'states:'", 0, 1);
  if (agents.empty()) throw ParseError("model has no agents", text.size(), 1);

  std::vector<std::string> names;
  for (const auto& a : agents) names.push_back(a.name);
  const bool standard = agents.front().has_tables;
  for (const auto& a : agents) {
    if (a.has_tables != standard) s.fail_at(a.head, "all agents must be partitional or all standard");
  }
  auto build = [&]() -> AnyModel {
    if (standard) {
      std::vector<AgentOperators> ops;
      for (const auto& a : agents) {
        ops.push_back({complete_table(s, a, a.k_table, *space, "k-table"),
                       complete_table(s, a, a.a_table, *space, "a-table")});
      }
      return StandardModel(*space, std::move(names), std::move(ops));
    }
    std::vector<AgentFrame> frames;
    for (const auto& a : agents) {
      AgentFrame f{*a.relation, {}};
      for (const auto& p : a.partitions) f.awareness.push_back(p ? *p : Partition::discrete(space->size()));
      frames.push_back(std::move(f));
    }
    return PartitionalModel(*space, std::move(names), std::move(frames), RelationRepair::kClose);
  };
  ModelFile out{build(), std::move(valuations), distinguished};
  return out;
}

std::string render_model_file(const ModelFile& mf) {
  const Model& m = mf.base();
  const StateSpace& sp = m.space();
  std::ostringstream out;
  out << "states:";
  for (const auto& l : sp.labels()) out << ' ' << l;
  out << '\n';
  for (std::size_t i = 0; i < m.agents().size(); ++i) {
    out << "\nagent " << m.agents()[i] << " {\n";
    if (const auto* pm = std::get_if<PartitionalModel>(&mf.model)) {
      const Relation& r = pm->relation(i);
      out << "  R:";
      if (r.is_all()) {
        out << " all";
      } else if (r.is_identity()) {
        out << " identity";
      } else {
        for (std::size_t x = 0; x < sp.size(); ++x) {
          for (std::size_t y = 0; y < sp.size(); ++y) {
            if (x != y && r.related(x, y)) out << ' ' << sp.label(x) << "->" << sp.label(y);
          }
        }
      }
      out << '\n';
      for (std::size_t s = 0; s < sp.size(); ++s) {
        out << "  partition @" << sp.label(s) << ':';
        for (Mask b : pm->partition(i, s).blocks()) out << ' ' << sp.format(b);
        out << '\n';
      }
    } else {
      const auto& ops = std::get<StandardModel>(mf.model).operators(i);
      for (const auto* which : {"k-table", "a-table"}) {
        const OperatorTable& t = std::string_view(which) == "k-table" ? ops.knowledge : ops.awareness;
        out << "  " << which << ":\n";
        for (std::size_t e = 0; e < t.size(); ++e) out << "    " << sp.format(e) << " -> " << sp.format(t[e]) << '\n';
      }
    }
    out << "}\n";
  }
  if (!mf.valuations.empty()) out << '\n';
  for (const auto& [name, v] : mf.valuations) {
    out << "valuation " << name << ':';
    const char* sep = " ";
    for (const auto& [letter, e] : v.entries()) {
      out << sep << letter << " = " << sp.format(e);
      sep = ", ";
    }
    out << '\n';
  }
  if (mf.distinguished) out << "\ndistinguished: " << sp.label(*mf.distinguished) << '\n';
  return out.str();
}

ModelFile builtin_model_file(std::string_view name) {
  ModelFile mf{builtin(name), {}, std::nullopt};
  const StateSpace& sp = mf.base().space();
  if (sp.find("alpha")) {
    mf.distinguished = sp.index_of("alpha");
    mf.valuations.emplace_back("e", Valuation{{"p", sp.event_of({"alpha", "w1"})}});
  } else {
    mf.distinguished = sp.index_of("1");
  }
  return mf;
}

Event parse_event(const StateSpace& space, std::string_view text) {
  Scanner s(text);
  const Mask m = detail::read_set(s, space);
  if (!s.at_end()) s.fail("unexpected text after the event");
  return space.event(m);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModelFile load_model(const std::string& name_or_path) {
  for (const auto& n : builtin_names()) {
    std::string lower;
    for (char c : n) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name_or_path == n || name_or_path == lower) return builtin_model_file(n);
  }
  return parse_model_file(read_text_file(name_or_path));
}

}  // namespace aware
