#ifndef CHERN_GROEBNER_HPP
#define CHERN_GROEBNER_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chern/ideal.hpp"

namespace chern {

// Buchberger with Gebauer–Möller pair elimination. Inputs may be sorted
// under any order; the result is the reduced basis under `ord`, sorted by
// increasing leading monomial (hence unique per (ideal, order)).
std::vector<Polynomial> buchberger(const Ring& R, std::vector<Polynomial> gens,
                                   const TermOrder& ord);

// Remainder of full division: no term of the result is divisible by any
// basis leading term. basis elements must be nonzero and sorted under ord.
Polynomial normal_form(const Ring& R, const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& ord);

Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool contains(const Ideal& I, const Polynomial& f);

// ----- ideal calculus -----
Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal ideal_product(const Ideal& A, const Ideal& B);
// I^n with basis re-reduction at each step; I^0 is the unit ideal.
Ideal ideal_power(const Ideal& A, int n);
// Single auxiliary elimination variable: (t*A + (1-t)*B) ∩ S.
Ideal ideal_intersection(const Ideal& A, const Ideal& B);

Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon(const Ideal& I, const Ideal& J);

// (I : J^∞) plus the saturation exponent (number of strict colon steps).
std::pair<Ideal, int> saturate(const Ideal& I, const Ideal& J);

// Replace generators by the reduced basis (controls generator growth).
Ideal reduced(const Ideal& I);

bool ideal_contains(const Ideal& A, const Ideal& B);  // B ⊆ A
bool ideal_equal(const Ideal& A, const Ideal& B);
bool is_unit_ideal(const Ideal& A);

// Krull dimension of R/I via variable subsets independent modulo the
// leading-term ideal. Unit ideal is an input error.
int krull_dim(const Ideal& I);

// Monomials outside the leading-term ideal; requires dim 0 (unit ideal
// yields the empty list). Their count is the vector-space length.
std::vector<Monomial> standard_monomials(const Ideal& I);
std::vector<Monomial> standard_monomials_up_to(const Ideal& I, int max_degree);
long length_zero_dim(const Ideal& I);

struct DoubleAnnihilatorResult {
  bool holds;
  std::optional<Polynomial> witness;  // a generator of L0:(L0:L) outside L
};

// Reflexivity test L = L0 : (L0 : L), the embedding-into-free criterion
// relative to the quotient by L0.
DoubleAnnihilatorResult double_annihilator_test(const Ideal& L0, const Ideal& L);

}  // namespace chern

#endif
