#ifndef CHERN_MONOMIAL_HPP
#define CHERN_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

// Dense exponent tuple with cached total degree (all variables weight 1).
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {
    for (int32_t x : e_) {
      if (x < 0) throw InputError("negative exponent in monomial");
      deg_ += x;
    }
  }

  static Monomial one(int nvars) { return Monomial(std::vector<int32_t>(nvars, 0)); }

  static Monomial var(int nvars, int i, int32_t power = 1) {
    std::vector<int32_t> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int32_t degree() const { return deg_; }
  int32_t exp(int i) const { return e_[i]; }
  const std::vector<int32_t>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  friend Monomial mul(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
    return Monomial(std::move(e));
  }

  // a | b
  friend bool divides(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    if (a.deg_ > b.deg_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > b.e_[i]) return false;
    return true;
  }

  // b / a, requires divides(a, b)
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    check_arity(a, b);
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = b.e_[i] - a.e_[i];
      if (e[i] < 0) throw InternalError("monomial quotient of non-multiple");
    }
    return Monomial(std::move(e));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

 private:
  static void check_arity(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size()) throw InputError("monomial arity mismatch");
  }

  std::vector<int32_t> e_;
  int32_t deg_ = 0;
};

// namespace-scope declarations so the friends are reachable by qualified
// lookup (e.g. from inside class scopes that shadow the names)
Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Total multiplicative monomial order with 1 minimal. Grevlex is the default
// everywhere; elimination orders are created internally for intersections.
class TermOrder {
 public:
  enum class Kind { Grevlex, Lex, Elim };

  static TermOrder grevlex() { return TermOrder(Kind::Grevlex, 0); }
  static TermOrder lex() { return TermOrder(Kind::Lex, 0); }

  // Block order eliminating the first k variables (grevlex inside each block).
  static TermOrder elimination(int k) {
    if (k <= 0) throw InputError("elimination block must be positive");
    return TermOrder(Kind::Elim, k);
  }

  TermOrder with_permutation(std::vector<int> perm) const {
    TermOrder t = *this;
    t.perm_ = std::move(perm);
    return t;
  }

  Kind kind() const { return kind_; }
  int elim_vars() const { return elim_; }

  // -1, 0, +1 for a < b, a = b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    if (n != b.nvars()) throw InputError("monomial arity mismatch");
    if (!perm_.empty() && static_cast<int>(perm_.size()) != n)
      throw InputError("term-order permutation arity mismatch");
    switch (kind_) {
      case Kind::Grevlex:
        return grevlex_block(a, b, 0, n);
      case Kind::Lex:
        for (int k = 0; k < n; ++k) {
          int32_t d = a.exp(pos(k)) - b.exp(pos(k));
          if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
      case Kind::Elim: {
        if (elim_ > n) throw InputError("elimination block exceeds arity");
        if (int c = grevlex_block(a, b, 0, elim_)) return c;
        return grevlex_block(a, b, elim_, n);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const TermOrder&) const = default;

 private:
  TermOrder(Kind k, int e) : kind_(k), elim_(e) {}

  int pos(int k) const { return perm_.empty() ? k : perm_[k]; }

  int grevlex_block(const Monomial& a, const Monomial& b, int lo, int hi) const {
    int64_t da = 0, db = 0;
    for (int k = lo; k < hi; ++k) {
      da += a.exp(pos(k));
      db += b.exp(pos(k));
    }
    if (da != db) return da > db ? 1 : -1;
    for (int k = hi - 1; k >= lo; --k) {
      int32_t d = a.exp(pos(k)) - b.exp(pos(k));
      if (d != 0) return d < 0 ? 1 : -1;  // smaller trailing exponent wins
    }
    return 0;
  }

  Kind kind_;
  int elim_;
  std::vector<int> perm_;
};

}  // namespace chern

#endif
