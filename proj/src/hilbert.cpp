#include "chern/hilbert.hpp"

#include <algorithm>

#include "chern/groebner.hpp"

namespace chern {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void gen_monomials_masked(int nvars, int deg, int i, const std::vector<int>& active,
                          std::vector<int32_t>& cur, std::vector<Monomial>& out) {
  if (i == static_cast<int>(active.size()) - 1) {
    cur[active[i]] = deg;
    out.push_back(Monomial(cur));
    cur[active[i]] = 0;
    return;
  }
  for (int e = 0; e <= deg; ++e) {
    cur[active[i]] = e;
    gen_monomials_masked(nvars, deg - e, i + 1, active, cur, out);
  }
  cur[active[i]] = 0;
}

// all monomials of the given degree in the first k variables
std::vector<Monomial> power_monomials(int nvars, int k, int deg) {
  std::vector<int> active(k);
  for (int i = 0; i < k; ++i) active[i] = i;
  std::vector<int32_t> cur(nvars, 0);
  std::vector<Monomial> out;
  gen_monomials_masked(nvars, deg, 0, active, cur, out);
  return out;
}

// rows of linear-form coefficients -> invertible matrix completing them to a
// basis, or nullopt when the forms are dependent
struct LinearChange {
  int k;                                   // number of independent forms
  std::vector<std::vector<int64_t>> inv;   // substitution matrix: x_j -> Σ inv[j][c] x_c
};

std::optional<LinearChange> linear_change(const Ring& R, const std::vector<Polynomial>& gens) {
  const int n = R.nvars();
  const PrimeField& F = R.field();
  std::vector<std::vector<int64_t>> rows;
  for (const Polynomial& g : gens) {
    std::vector<int64_t> row(n, 0);
    for (const Term& t : g.terms()) {
      if (t.mono.degree() != 1) return std::nullopt;
      for (int i = 0; i < n; ++i)
        if (t.mono.exp(i) == 1) row[i] = t.coeff;
    }
    rows.push_back(std::move(row));
  }
  // echelonize; dependent rows disappear (they generate the same ideal)
  std::vector<std::vector<int64_t>> basis;
  std::vector<int> pivots;
  for (auto row : rows) {
    for (size_t r = 0; r < basis.size(); ++r) {
      int64_t f = row[pivots[r]];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) row[c] = F.sub(row[c], F.mul(f, basis[r][c]));
    }
    int piv = -1;
    for (int c = 0; c < n; ++c)
      if (row[c] != 0) {
        piv = c;
        break;
      }
    if (piv < 0) continue;
    int64_t inv = F.inv(row[piv]);
    for (int c = 0; c < n; ++c) row[c] = F.mul(row[c], inv);
    basis.push_back(row);
    pivots.push_back(piv);
  }
  const int k = static_cast<int>(basis.size());
  // complete with unit vectors on non-pivot columns
  std::vector<bool> used(n, false);
  for (int p : pivots) used[p] = true;
  std::vector<std::vector<int64_t>> B = basis;
  for (int c = 0; c < n; ++c) {
    if (used[c]) continue;
    std::vector<int64_t> e(n, 0);
    e[c] = 1;
    B.push_back(std::move(e));
  }
  // invert B by Gauss-Jordan on [B | I]
  std::vector<std::vector<int64_t>> aug(n, std::vector<int64_t>(2 * n, 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = B[r][c];
    aug[r][n + r] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (aug[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw InternalError("linear change of coordinates is singular");
    std::swap(aug[c], aug[piv]);
    int64_t inv = F.inv(aug[c][c]);
    for (int cc = 0; cc < 2 * n; ++cc) aug[c][cc] = F.mul(aug[c][cc], inv);
    for (int r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      int64_t f = aug[r][c];
      for (int cc = 0; cc < 2 * n; ++cc) aug[r][cc] = F.sub(aug[r][cc], F.mul(f, aug[c][cc]));
    }
  }
  LinearChange out;
  out.k = k;
  out.inv.assign(n, std::vector<int64_t>(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.inv[r][c] = aug[r][n + c];
  return out;
}

}  // namespace

HilbertSamuelTable hs_sample(const Ideal& I, int N, bool allow_linear_fastpath) {
  const RingPtr& Rp = I.ring();
  const Ring& R = *Rp;
  const int dim_ring = krull_dim(Ideal(Rp, {}));
  if (N < dim_ring + 3) throw InputError("hs_sample: N must be at least dim + 3");
  if (krull_dim(I) != 0) throw InputError("hs_sample: ideal is not m-primary in its ring");

  HilbertSamuelTable T;
  T.values.reserve(N + 1);

  bool all_linear = !I.gens().empty();
  for (const Polynomial& g : I.gens())
    if (g.degree() != 1 || !g.is_homogeneous()) all_linear = false;

  if (allow_linear_fastpath && all_linear) {
    auto change = linear_change(R, I.gens());
    if (change) {
      RingPtr amb = Ring::make(R.p(), R.vars(), R.order());
      std::vector<Polynomial> images;
      images.reserve(R.nvars());
      for (int j = 0; j < R.nvars(); ++j) {
        std::vector<Term> terms;
        for (int c = 0; c < R.nvars(); ++c)
          if (change->inv[j][c] != 0)
            terms.push_back(Term{change->inv[j][c], Monomial::var(R.nvars(), c)});
        images.push_back(amb->normalize(std::move(terms)));
      }
      std::vector<Polynomial> Lphi;
      for (const Polynomial& g : R.quotient_gens()) Lphi.push_back(amb->substitute(g, images));
      for (int n = 0; n <= N; ++n) {
        std::vector<Polynomial> gens = Lphi;
        for (const Monomial& m : power_monomials(R.nvars(), change->k, n + 1))
          gens.push_back(amb->monomial(1, m));
        T.values.push_back(length_zero_dim(Ideal(amb, std::move(gens))));
      }
      if (dim_ring >= 1) {
        for (int n = 0; n < N; ++n)
          if (T.values[n + 1] <= T.values[n])
            throw InternalError("Hilbert-Samuel values not strictly increasing");
      }
      return T;
    }
  }

  Ideal P = reduced(I);
  T.values.push_back(length_zero_dim(P));
  for (int n = 1; n <= N; ++n) {
    P = reduced(ideal_product(P, I));
    T.values.push_back(length_zero_dim(P));
  }
  if (dim_ring >= 1) {
    for (int n = 0; n < N; ++n)
      if (T.values[n + 1] <= T.values[n])
        throw InternalError("Hilbert-Samuel values not strictly increasing");
  }
  return T;
}

EVector fit_evector(const std::vector<long>& values, int d) {
  const int K = 3;
  if (d < 0) throw InputError("negative dimension in fit");
  const int N = static_cast<int>(values.size()) - 1;
  if (static_cast<int>(values.size()) < d + K + 2)
    throw UnstableError("unstable fit: increase N (need at least d + 5 samples)");

  std::vector<long long> rem(values.begin(), values.end());
  EVector ev;
  ev.d = d;
  ev.window = K;

  for (int i = 0; i <= d; ++i) {
    const int steps = d - i;
    std::vector<long long> diff = rem;
    for (int s = 0; s < steps; ++s)
      for (size_t n = 0; n + 1 < diff.size(); ++n) diff[n] = diff[n + 1] - diff[n];
    diff.resize(rem.size() - steps);
    // tail window must be constant
    long long c = diff[diff.size() - 1];
    for (size_t w = diff.size() - K - 1; w < diff.size(); ++w) {
      if (diff[w] != c)
        throw UnstableError("unstable fit: increase N (difference tail not constant)");
    }
    ev.e.push_back(static_cast<long>((i % 2 == 0) ? c : -c));
    for (int n = 0; n <= N; ++n)
      rem[n] -= c * binomial(n + d - i, d - i);
  }

  // the fitted polynomial must reproduce the tail exactly
  int n0 = N + 1;
  for (int n = N; n >= 0; --n) {
    if (rem[n] != 0) break;
    n0 = n;
  }
  if (n0 > N - K) throw UnstableError("unstable fit: increase N (tail mismatch)");
  if (ev.e[0] <= 0)
    throw InternalError("fitted multiplicity is not positive; dimension disagrees with the table");
  ev.n0 = n0;
  return ev;
}

EVector fit_evector(const HilbertSamuelTable& T, int d) { return fit_evector(T.values, d); }

EVector fitted_evector(const Ideal& I, int d, int nmax, bool allow_linear_fastpath) {
  HilbertSamuelTable T = hs_sample(I, nmax + 2, allow_linear_fastpath);
  std::vector<long> head(T.values.begin(), T.values.end() - 2);
  EVector a = fit_evector(head, d);
  EVector b = fit_evector(T.values, d);
  if (a.e != b.e)
    throw UnstableError("pseudo-stabilization: e-vector changed when refit with N+2 samples");
  return b;
}

namespace {

EVector graded_fit(const HilbertFunctionTable& H, int d, GradingConvention conv, int a) {
  HilbertFunctionTable PS = partial_sum_table(H);
  std::vector<long> vals;
  if (conv == GradingConvention::Natural) {
    vals = PS.values;
  } else {
    for (int n = a; n < static_cast<int>(PS.values.size()); ++n) vals.push_back(PS.values[n]);
  }
  return fit_evector(vals, d);
}

}  // namespace

EVector graded_evector(const GradedSubmodule& M, GradingConvention conv, int n_max) {
  int maxdeg = 0;
  for (int e : M.gen_degrees()) maxdeg = std::max(maxdeg, e);
  if (n_max < 0) n_max = default_degree_bound(M.ring(), maxdeg);
  const int d = M.ring()->nvars();
  HilbertFunctionTable H = hilbert_function(M, n_max);
  for (int n = 0; n < std::min<int>(M.generation_degree(), H.max_degree() + 1); ++n)
    if (H.values[n] != 0) throw InternalError("module has nonzero piece below generation degree");
  return graded_fit(H, d, conv, M.generation_degree());
}

EVector graded_evector(const RingPtr& quotient_ring, GradingConvention conv, int n_max) {
  int maxdeg = 0;
  for (const Polynomial& g : quotient_ring->quotient_gens())
    maxdeg = std::max(maxdeg, g.degree());
  if (n_max < 0) n_max = default_degree_bound(quotient_ring, maxdeg);
  RingPtr amb = Ring::make(quotient_ring->p(), quotient_ring->vars(), quotient_ring->order());
  int d = quotient_ring->is_quotient()
              ? krull_dim(Ideal(amb, quotient_ring->quotient_gens()))
              : quotient_ring->nvars();
  HilbertFunctionTable H = hilbert_function(quotient_ring, n_max);
  return graded_fit(H, d, conv, 0);
}

long finite_colength(const Ideal& small, const Ideal& big) {
  if (!same_ring(small.ring(), big.ring()))
    throw InputError("finite_colength: operands live in different rings");
  if (!ideal_contains(big, small))
    throw InputError("finite_colength: first ideal not contained in the second");
  if (ideal_equal(small, big)) return 0;
  const RingPtr& Rp = small.ring();
  std::vector<Polynomial> vars;
  for (int i = 0; i < Rp->nvars(); ++i) vars.push_back(Rp->variable(i));
  Ideal m(Rp, vars);
  Ideal pow = m;
  long prev = -1;
  int run = 0;
  for (int n = 0; n <= 40; ++n) {
    long a = length_zero_dim(ideal_sum(small, pow));
    long b = length_zero_dim(ideal_sum(big, pow));
    long D = a - b;
    if (D == prev) {
      if (++run >= 3) return D;
    } else {
      prev = D;
      run = 0;
    }
    pow = reduced(ideal_product(pow, m));
  }
  throw UnstableError("finite_colength: difference did not stabilize (quotient may be infinite)");
}

}  // namespace chern
