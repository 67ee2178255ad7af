#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tatekit/homology.hpp"

namespace tatekit {

// Stable and ordinary Betti/Bass data of one module over a degree window.
struct BettiBassProfile {
  std::string module_name;
  int lo = 0, hi = 0;
  std::vector<int> stable_betti;    // dim of stable ext against k, per degree
  std::vector<int> stable_bass;     // dim of stable ext of k into the module
  std::vector<int> ordinary_betti;  // resolution ranks for degrees 0..max(hi,0)

  int betti_at(int i) const { return stable_betti[(size_t)(i - lo)]; }
  int bass_at(int i) const { return stable_bass[(size_t)(i - lo)]; }
};

BettiBassProfile profile(const Module& m, int lo, int hi);

// Growth estimate for the betti sequence up to a horizon: 0 when it dies,
// e+1 when finite differences of order e+1 settle to zero, otherwise a
// lower bound. Never a certified asymptotic statement.
struct ComplexityEstimate {
  int value = 0;
  bool lower_bound = false;  // true renders as ">=value"
  int horizon = 0;

  std::string to_string() const;
};

ComplexityEstimate complexity_estimate(const Module& m, int horizon);

// Ext^i(M, A) = 0 for 1 <= i <= dim A + 2 and the biduality map invertible.
bool gdim_is_zero(const Module& m);

// Least degree with Ext^i(m, n) nonzero, or nothing up to the horizon.
std::optional<int> grade(const Module& m, const Module& n, int horizon);

}  // namespace tatekit
