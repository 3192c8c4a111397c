#ifndef CHERN_HILBERT_HPP
#define CHERN_HILBERT_HPP

#include <vector>

#include "chern/graded.hpp"
#include "chern/ideal.hpp"

namespace chern {

struct HilbertSamuelTable {
  std::vector<long> values;  // values[n] = λ(R/I^{n+1})

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// Coefficients of the Hilbert-Samuel polynomial in the signed binomial
// basis: P(n) = Σ_i (-1)^i e[i] binom(n+d-i, d-i). The fit is exact integer
// arithmetic; n0 is the first index from which P matches every sample.
struct EVector {
  int d = 0;
  std::vector<long> e;
  int n0 = 0;
  int window = 3;

  long e0() const { return e.at(0); }
  long e1() const { return d >= 1 ? e.at(1) : 0; }

  bool operator==(const EVector&) const = default;
};

// λ(R/I^{n+1}) for n = 0..N. I must be m-primary in its ring. When the
// generators are independent linear forms, lengths are computed after a
// linear change of coordinates that turns I into a subset of the variables
// (powers become monomial ideals); the generic path multiplies ideals with
// basis re-reduction at each step. Both paths agree (tested).
HilbertSamuelTable hs_sample(const Ideal& I, int N, bool allow_linear_fastpath = true);

// Forward-difference fit with stabilization window K = 3 and a full
// back-substitution check. Throws UnstableError when the tail has not
// stabilized ("unstable fit: increase N").
EVector fit_evector(const HilbertSamuelTable& T, int d);
EVector fit_evector(const std::vector<long>& values, int d);

// Fit at N and at N+2 from one sampled table; a disagreement is reported as
// instability (pseudo-stabilization guard), never as a result.
EVector fitted_evector(const Ideal& I, int d, int nmax, bool allow_linear_fastpath = true);

enum class GradingConvention { Natural, Shifted };

// e-vector of a graded object from partial sums of its Hilbert function.
// Natural fits from degree 0; Shifted re-indexes so degree a maps to 0
// (the associated-graded convention, e_1(M[a]) = e_1(M) - a e_0(M)).
EVector graded_evector(const GradedSubmodule& M, GradingConvention conv, int n_max = -1);
EVector graded_evector(const RingPtr& quotient_ring, GradingConvention conv, int n_max = -1);

// λ(big/small) for nested ideals with finite-length quotient, by stabilized
// differences λ(R/(small + m^{n+1})) - λ(R/(big + m^{n+1})).
long finite_colength(const Ideal& small, const Ideal& big);

long long binomial(long long n, long long k);

}  // namespace chern

#endif
