#pragma once

#include <cstdint>

#include "tatekit/errors.hpp"

namespace tatekit {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Deterministic trial division; n < 2^31 so the divisor loop stays below 46341.
inline bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u32 d = 3; d * (u64)d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Arithmetic in F_p for a prime modulus 2 <= p < 2^31.
// All values passed in and handed out are canonical residues in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(u32 p) : p_(p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      fail(errc::bad_field, "characteristic must be a prime below 2^31, got " + std::to_string(p));
  }

  u32 p() const { return p_; }

  u32 canon(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    return (u32)r;
  }

  u32 add(u32 a, u32 b) const {
    u32 s = a + b;  // a, b < 2^31: no overflow
    return s >= p_ ? s - p_ : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + (p_ - b); }
  u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
  u32 mul(u32 a, u32 b) const { return (u32)((u64)a * b % p_); }

  u32 pow(u32 a, u64 e) const {
    u32 r = 1 % p_;
    u32 base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Inverse by Fermat; a must be nonzero.
  u32 inv(u32 a) const {
    if (a == 0) fail(errc::bad_input, "inverse of zero");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  u32 p_ = 2;
};

}  // namespace tatekit
