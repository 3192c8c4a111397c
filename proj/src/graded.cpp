#include "chern/graded.hpp"

#include <algorithm>
#include <map>

#include "chern/groebner.hpp"

namespace chern {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void gen_monomials(int nvars, int deg, int i, std::vector<int32_t>& cur,
                   std::vector<Monomial>& out) {
  if (i == nvars - 1) {
    cur[i] = deg;
    out.push_back(Monomial(cur));
    cur[i] = 0;
    return;
  }
  for (int e = 0; e <= deg; ++e) {
    cur[i] = e;
    gen_monomials(nvars, deg - e, i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  std::vector<int32_t> cur(nvars, 0);
  gen_monomials(nvars, deg, 0, cur, out);
  return out;
}

// destructive row-rank over F_p
long rank_mod_p(std::vector<std::vector<int64_t>>& rows, const PrimeField& F) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    int64_t inv = F.inv(rows[r][c]);
    for (size_t cc = c; cc < cols; ++cc) rows[r][cc] = F.mul(rows[r][cc], inv);
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == r || rows[rr][c] == 0) continue;
      int64_t f = rows[rr][c];
      for (size_t cc = c; cc < cols; ++cc)
        rows[rr][cc] = F.sub(rows[rr][cc], F.mul(f, rows[r][cc]));
    }
    ++r;
  }
  return static_cast<long>(r);
}

void require_homogeneous_quotient(const Ring& R) {
  for (const Polynomial& g : R.quotient_gens())
    if (!g.is_homogeneous())
      throw InputError(
          "quotient ideal is not homogeneous; use the adic Hilbert-Samuel sampler instead");
}

// span of {monomial multiples of gens landing in degree n} inside S_n^rank;
// rows are the multiples, columns indexed by (component, monomial).
long multiples_rank(const Ring& R, int rank, const std::vector<std::vector<Polynomial>>& gens,
                    const std::vector<int>& degs, int n) {
  auto monos = monomials_of_degree(R.nvars(), n);
  std::map<std::vector<int32_t>, int> index;
  for (size_t k = 0; k < monos.size(); ++k) index[monos[k].exps()] = static_cast<int>(k);
  const size_t cols = static_cast<size_t>(rank) * monos.size();
  std::vector<std::vector<int64_t>> rows;
  for (size_t j = 0; j < gens.size(); ++j) {
    if (degs[j] > n) continue;
    for (const Monomial& m : monomials_of_degree(R.nvars(), n - degs[j])) {
      std::vector<int64_t> row(cols, 0);
      for (int comp = 0; comp < rank; ++comp) {
        const Polynomial& g = gens[j][comp];
        for (const Term& t : g.terms()) {
          int idx = index.at(mul(t.mono, m).exps());
          int64_t& cell = row[static_cast<size_t>(comp) * monos.size() + idx];
          cell = R.field().add(cell, t.coeff);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_mod_p(rows, R.field());
}

}  // namespace

GradedSubmodule::GradedSubmodule(RingPtr ring, int rank,
                                 std::vector<std::vector<Polynomial>> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  if (!ring_) throw InputError("null ring in graded submodule");
  if (ring_->is_quotient())
    throw InputError("graded submodules are supported over polynomial rings only");
  if (rank_ < 0) throw InputError("negative ambient rank");
  for (auto& v : gens_) {
    if (static_cast<int>(v.size()) != rank_)
      throw InputError("generator vector length differs from ambient rank");
    int deg = -1;
    bool nonzero = false;
    for (auto& comp : v) {
      Polynomial c = ring_->normalize(comp.terms());
      if (c.is_zero()) {
        comp = c;
        continue;
      }
      if (!c.is_homogeneous()) throw InputError("generator component is not homogeneous");
      if (deg >= 0 && c.degree() != deg)
        throw InputError("generator vector mixes component degrees");
      deg = c.degree();
      nonzero = true;
      comp = c;
    }
    if (!nonzero) throw InputError("zero generator vector in graded submodule");
    degs_.push_back(deg);
  }
}

int GradedSubmodule::generation_degree() const {
  if (degs_.empty()) return 0;
  return *std::min_element(degs_.begin(), degs_.end());
}

bool GradedSubmodule::single_degree() const {
  for (int d : degs_)
    if (d != degs_.front()) return false;
  return true;
}

long graded_dim(const RingPtr& quotient_ring, int n) {
  if (n < 0) throw InputError("negative degree");
  const Ring& R = *quotient_ring;
  require_homogeneous_quotient(R);
  Ideal L(quotient_ring, {});
  long count = 0;
  for (const Monomial& m : standard_monomials_up_to(L, n))
    if (m.degree() == n) ++count;
  return count;
}

long graded_dim_by_rank(const RingPtr& quotient_ring, int n) {
  if (n < 0) throw InputError("negative degree");
  const Ring& R = *quotient_ring;
  require_homogeneous_quotient(R);
  std::vector<std::vector<Polynomial>> gens;
  std::vector<int> degs;
  for (const Polynomial& g : R.quotient_gens()) {
    gens.push_back({g});
    degs.push_back(g.degree());
  }
  long full = binom(n + R.nvars() - 1, R.nvars() - 1);
  return full - multiples_rank(R, 1, gens, degs, n);
}

long graded_dim(const GradedSubmodule& M, int n) {
  if (n < 0) throw InputError("negative degree");
  return multiples_rank(*M.ring(), M.rank(), M.gens(), M.gen_degrees(), n);
}

HilbertFunctionTable hilbert_function(const RingPtr& quotient_ring, int n_max) {
  require_homogeneous_quotient(*quotient_ring);
  Ideal L(quotient_ring, {});
  HilbertFunctionTable T;
  T.values.assign(n_max + 1, 0);
  for (const Monomial& m : standard_monomials_up_to(L, n_max)) ++T.values[m.degree()];
  return T;
}

HilbertFunctionTable hilbert_function(const GradedSubmodule& M, int n_max) {
  HilbertFunctionTable T;
  T.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) T.values.push_back(graded_dim(M, n));
  return T;
}

HilbertFunctionTable partial_sum_table(const HilbertFunctionTable& H) {
  HilbertFunctionTable T;
  T.values.reserve(H.values.size());
  long acc = 0;
  for (long v : H.values) {
    acc += v;
    T.values.push_back(acc);
  }
  return T;
}

int default_degree_bound(const RingPtr& ring, int max_gen_degree) {
  return 2 * (ring->nvars() + std::max(0, max_gen_degree)) + 8;
}

FreenessProbe freeness_probe(const GradedSubmodule& M, int bound) {
  FreenessProbe P;
  P.bound = bound;
  P.witness_degree = -1;
  P.free_up_to_bound = true;

  // minimal generator counts per degree: mu_e = dim M_e - dim (m*M)_e, and
  // (m*M)_e is spanned by multiples of the generators of degree < e
  std::vector<int> distinct = M.gen_degrees();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int e : distinct) {
    std::vector<std::vector<Polynomial>> lower;
    std::vector<int> lower_degs;
    for (size_t j = 0; j < M.gens().size(); ++j) {
      if (M.gen_degrees()[j] < e) {
        lower.push_back(M.gens()[j]);
        lower_degs.push_back(M.gen_degrees()[j]);
      }
    }
    long all = graded_dim(M, e);
    long from_below = multiples_rank(*M.ring(), M.rank(), lower, lower_degs, e);
    int mu = static_cast<int>(all - from_below);
    if (mu > 0) P.mu.emplace_back(e, mu);
  }

  const int d = M.ring()->nvars();
  for (int n = 0; n <= bound; ++n) {
    long expect = 0;
    for (auto [e, mu] : P.mu) expect += mu * binom(n - e + d - 1, d - 1);
    long have = graded_dim(M, n);
    if (have > expect) throw InternalError("submodule exceeds its free cover");
    if (have < expect) {
      P.free_up_to_bound = false;
      P.witness_degree = n;
      break;
    }
  }
  return P;
}

}  // namespace chern
