#include "tatekit/invariants.hpp"

#include <algorithm>

namespace tatekit {

BettiBassProfile profile(const Module& m, int lo, int hi) {
  if (lo > hi) fail(errc::bad_input, "profile window is empty");
  BettiBassProfile p;
  p.module_name = m.name;
  p.lo = lo;
  p.hi = hi;
  Module k = residue_field(m.alg);
  p.stable_betti = tate_ext(m, k, lo, hi).dims;
  p.stable_bass = tate_ext(k, m, lo, hi).dims;
  p.ordinary_betti = betti_numbers(m, std::max(hi, 0));
  return p;
}

std::string ComplexityEstimate::to_string() const {
  return (lower_bound ? ">=" : "") + std::to_string(value);
}

ComplexityEstimate complexity_estimate(const Module& m, int horizon) {
  if (horizon < 4) fail(errc::bad_input, "complexity horizon must be at least 4");
  ComplexityEstimate est;
  est.horizon = horizon;
  std::vector<int> row = betti_numbers(m, horizon);
  if (row.back() == 0) {  // a vanished syzygy never comes back
    est.value = 0;
    return est;
  }
  // difference rows; degree-e growth empties the (e+1)-th row's tail
  for (int e = 0; e + 3 <= horizon; ++e) {
    std::vector<int> next;
    for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
    row = std::move(next);
    bool settled = row.size() >= 3;
    for (size_t i = row.size() - 3; settled && i < row.size(); ++i)
      if (row[i] != 0) settled = false;
    if (settled) {
      est.value = e + 1;
      return est;
    }
  }
  est.value = horizon - 1;
  est.lower_bound = true;
  return est;
}

bool gdim_is_zero(const Module& m) {
  if (m.kdim == 0) return true;
  Module fr = free_module(m.alg, 1);
  std::vector<int> e = ordinary_ext_dims(m, fr, m.alg->dim + 2);
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i]) return false;
  return inverse(biduality_map(m)).has_value();
}

std::optional<int> grade(const Module& m, const Module& n, int horizon) {
  if (horizon < 0) fail(errc::bad_input, "grade horizon must be nonnegative");
  std::vector<int> e = ordinary_ext_dims(m, n, horizon);
  for (int i = 0; i <= horizon; ++i)
    if (e[(size_t)i]) return i;
  return std::nullopt;
}

}  // namespace tatekit
