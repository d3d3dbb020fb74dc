#ifndef AWARE_KNOWN_RESULTS_HPP_
#define AWARE_KNOWN_RESULTS_HPP_

#include <string>
#include <vector>

namespace aware {

/// One published fact about the built-in models, scenarios or calculi,
/// recomputed from scratch.
struct KnownResult {
  std::string topic;  // "M_DLR3", "M_RING4", "trade", "calculus", "syntax"
  std::string claim;
  bool holds = false;
  std::string detail;  // observed value or exception text
};

/// Recomputes every fact. Exceptions inside a check mark that check failed.
std::vector<KnownResult> check_known_results();

/// Proof text (dlr calculus) deriving ~K_1 U_1 p from AU, P and K-T.
const std::string& not_knows_unaware_proof();

}  // namespace aware

#endif  // AWARE_KNOWN_RESULTS_HPP_
