#ifndef CHERN_RING_HPP
#define CHERN_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "chern/monomial.hpp"
#include "chern/polynomial.hpp"
#include "chern/prime_field.hpp"

namespace chern {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ring descriptor: S = F_p[vars] with a fixed term order, or R = S/L when
// quotient generators are present. Polynomials are plain data; all
// arithmetic and normalization go through the ring. Immutable once built.
class Ring {
 public:
  static RingPtr make(int64_t p, std::vector<std::string> vars,
                      TermOrder ord = TermOrder::grevlex());

  // Same ambient variables and order, quotient generators extended.
  static RingPtr quotient_of(const RingPtr& base, const std::vector<Polynomial>& extra);

  const PrimeField& field() const { return fld_; }
  int64_t p() const { return fld_.p(); }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_.at(i); }
  int var_index(const std::string& name) const;  // -1 if absent
  const TermOrder& order() const { return ord_; }
  const std::vector<Polynomial>& quotient_gens() const { return quot_; }
  bool is_quotient() const { return !quot_.empty(); }

  // ----- polynomial construction -----
  Polynomial zero() const { return Polynomial(); }
  Polynomial constant(int64_t c) const;
  Polynomial variable(int i) const;
  Polynomial monomial(int64_t c, Monomial m) const;
  Polynomial one() const { return constant(1); }

  // Sort under `ord` (default: ring order), merge duplicates, drop zeros.
  Polynomial normalize(std::vector<Term> terms) const { return normalize(terms, ord_); }
  Polynomial normalize(std::vector<Term> terms, const TermOrder& ord) const;

  // ----- arithmetic (results normalized under the ring order) -----
  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(int64_t c, const Polynomial& f) const;
  // c * m * f; order-preserving, no re-sort needed
  Polynomial mul_term(int64_t c, const Monomial& m, const Polynomial& f) const;
  Polynomial monic(const Polynomial& f) const;
  Polynomial pow(const Polynomial& f, int e) const;

  // Substitute variable i by images[i] (polynomials of this ring).
  Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) const;

  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;

  int compare(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b); }

  friend bool same_ring(const Ring& a, const Ring& b);

 private:
  Ring(PrimeField f, std::vector<std::string> vars, TermOrder ord, std::vector<Polynomial> quot)
      : fld_(f), vars_(std::move(vars)), ord_(std::move(ord)), quot_(std::move(quot)) {}

  void check_arity(const Polynomial& f) const;

  PrimeField fld_;
  std::vector<std::string> vars_;
  TermOrder ord_;
  std::vector<Polynomial> quot_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && same_ring(*a, *b));
}

}  // namespace chern

#endif
