#ifndef CHERN_POLYNOMIAL_HPP
#define CHERN_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "chern/errors.hpp"
#include "chern/monomial.hpp"

namespace chern {

struct Term {
  int64_t coeff;  // nonzero residue in [0, p)
  Monomial mono;

  bool operator==(const Term&) const = default;
};

// Plain term container. Invariant (maintained by Ring): terms strictly
// decreasing under the active order, coefficients nonzero, no duplicates.
// The zero polynomial is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> sorted_terms) : t_(std::move(sorted_terms)) {}

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  const Term& lead() const {
    if (t_.empty()) throw InternalError("leading term of zero polynomial");
    return t_.front();
  }

  int degree() const {
    int d = -1;
    for (const Term& t : t_) d = std::max<int>(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const Term& t : t_)
      if (t.mono.degree() != t_.front().mono.degree()) return false;
    return true;
  }

  bool is_monomial() const { return t_.size() == 1; }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> t_;
};

}  // namespace chern

#endif
