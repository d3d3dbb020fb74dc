#ifndef AWARE_TESTS_SUPPORT_HPP_
#define AWARE_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "aware/formula.hpp"
#include "aware/generators.hpp"

namespace aware::testing {

struct FormulaShape {
  std::vector<std::string> letters{"p", "q", "r"};
  std::vector<std::string> agents{"1", "2"};
  bool quantifiers = true;
  bool common_knowledge = true;
};

/// Random tree of depth at most `depth` over every node kind allowed by `shape`.
inline Formula random_formula(Rng& rng, int depth, const FormulaShape& shape = {}) {
  auto letter = [&] { return shape.letters[below(rng, shape.letters.size())]; };
  auto agent = [&] { return shape.agents[below(rng, shape.agents.size())]; };
  if (depth <= 0 || below(rng, 4) == 0) {
    switch (below(rng, 6)) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      default: return Formula::letter(letter());
    }
  }
  auto sub = [&] { return random_formula(rng, depth - 1, shape); };
  for (;;) {
    switch (below(rng, 13)) {
      case 0: return Formula::negation(sub());
      case 1: return Formula::conjunction(sub(), sub());
      case 2: return Formula::disjunction(sub(), sub());
      case 3: return Formula::implication(sub(), sub());
      case 4: return Formula::biconditional(sub(), sub());
      case 5: return Formula::knows(agent(), sub());
      case 6: return Formula::aware(agent(), sub());
      case 7: return Formula::unaware(agent(), sub());
      case 8:
        if (!shape.common_knowledge) continue;
        return Formula::common_knowledge(agent(), sub());
      case 9:
        if (!shape.quantifiers) continue;
        return Formula::forall(letter(), sub());
      case 10:
        if (!shape.quantifiers) continue;
        return Formula::exists(letter(), sub());
      default: return Formula::conjunction(Formula::knows(agent(), sub()), sub());
    }
  }
}

}  // namespace aware::testing

#endif  // AWARE_TESTS_SUPPORT_HPP_
