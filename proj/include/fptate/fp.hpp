#pragma once

#include <cstdint>

#include "fptate/errors.hpp"

namespace fptate {

/// Arithmetic in the prime field F_p. Values are always kept reduced in
/// [0, p); there is no lazy reduction anywhere in the engine.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) raise(errc::non_prime, "characteristic " + std::to_string(p) + " is not prime");
  }

  std::uint32_t p() const { return p_; }

  /// Reduce an arbitrary signed value into [0, p).
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  /// Multiplicative inverse of a nonzero residue, by extended Euclid.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) raise(errc::precondition, "inverse of zero");
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a % p_;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

private:
  std::uint32_t p_;
};

} // namespace fptate
