#ifndef CHERN_PRIME_FIELD_HPP
#define CHERN_PRIME_FIELD_HPP

#include <cstdint>

#include "chern/errors.hpp"

namespace chern {

// Arithmetic of F_p for an odd prime p. Elements are int64 residues in
// [0, p); products go through 128-bit intermediates so any p < 2^62 is safe.
class PrimeField {
 public:
  explicit PrimeField(int64_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw InputError("characteristic must be an odd prime");
  }

  int64_t p() const { return p_; }

  int64_t reduce(int64_t a) const {
    int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }

  int64_t add(int64_t a, int64_t b) const {
    int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  int64_t sub(int64_t a, int64_t b) const {
    int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }

  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }

  int64_t mul(int64_t a, int64_t b) const {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % p_);
  }

  int64_t inv(int64_t a) const {
    if (a == 0) throw InputError("division by zero in prime field");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }

  int64_t div(int64_t a, int64_t b) const { return mul(a, inv(b)); }

  int64_t pow(int64_t a, uint64_t e) const {
    int64_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Signed representative in (-p/2, p/2], used by printers.
  int64_t centered(int64_t a) const { return a > p_ / 2 ? a - p_ : a; }

  static bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField&) const = default;

 private:
  int64_t p_;
};

}  // namespace chern

#endif
