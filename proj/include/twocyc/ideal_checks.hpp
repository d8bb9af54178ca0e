#pragma once

#include <map>
#include <string>

#include "twocyc/stability.hpp"

namespace twocyc {

// Verifies the ideal-equality chain
//   <W3..W_{2k+1}> = <W3..W_{2k+2}> = <V3,V5..V_{2k+1}>,  k = 1..m-1,
// terminating with <V3..V_{2m+1}> = <W3..W_{d^2}>, and returns the smallest
// m for which it holds. The cyclicity of the family is then at most m-1.
struct UpperHypothesesResult {
  bool ok = false;
  bool inconclusive = false;  // budget ran out before a verdict
  int m = 0;
  int verified_through_k = 0;
  std::string detail;
};
UpperHypothesesResult check_upper_hypotheses(int d, const GroebnerOptions& opts = {});

// Smallest ell such that every W_j (3 <= j <= d^2) has some power <= n_max
// in <V3, V5, ..., V_{2*ell+1}>. The highest weak-point order is ell-1.
struct LradResult {
  bool ok = false;
  bool inconclusive = false;
  int ell = 0;
  std::map<int, int> exponent_profile;  // j -> smallest exponent at ell
  std::string detail;
};
LradResult check_lrad(int d, int n_max = 4, const GroebnerOptions& opts = {});

}  // namespace twocyc
