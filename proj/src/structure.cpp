#include "chern/structure.hpp"

#include "chern/groebner.hpp"
#include "chern/rng.hpp"

namespace chern {

namespace {

RingPtr ambient_of(const RingPtr& R) {
  if (!R->is_quotient()) return R;
  return Ring::make(R->p(), R->vars(), R->order());
}

Ideal maximal_ideal(const RingPtr& R) {
  std::vector<Polynomial> vars;
  vars.reserve(R->nvars());
  for (int i = 0; i < R->nvars(); ++i) vars.push_back(R->variable(i));
  return Ideal(R, std::move(vars));
}

Polynomial random_linear_form(const Ring& R, Rng& rng) {
  std::vector<Term> terms;
  for (int i = 0; i < R.nvars(); ++i) {
    int64_t c = rng.mod(R.p());
    if (c != 0) terms.push_back(Term{c, Monomial::var(R.nvars(), i)});
  }
  return R.normalize(std::move(terms));
}

}  // namespace

int depth(const RingPtr& R, uint64_t seed, const StructureConfig& cfg) {
  RingPtr amb = ambient_of(R);
  Ideal cur(amb, R->quotient_gens());
  if (is_unit_ideal(cur)) throw InputError("depth of the zero ring");
  Ideal m = maximal_ideal(amb);
  int count = 0;
  while (true) {
    auto [sat, steps] = saturate(cur, m);
    if (!ideal_equal(sat, cur)) return count;  // m is associated: regular sequence is maximal
    bool extended = false;
    for (int t = 0; t < cfg.trials; ++t) {
      Rng rng(derive_seed(seed, "depth", static_cast<uint64_t>(count) * cfg.trials + t));
      Polynomial l = random_linear_form(*amb, rng);
      if (l.is_zero()) continue;
      if (ideal_equal(colon(cur, l), cur)) {  // exact nonzerodivisor certificate
        cur = reduced(ideal_sum(cur, Ideal(amb, {l})));
        ++count;
        extended = true;
        break;
      }
    }
    if (!extended)
      throw GenericityError(
          "depth: no linear nonzerodivisor found after " + std::to_string(cfg.trials) +
          " trials; retry with a larger field or more trials");
    if (count > amb->nvars()) throw InternalError("depth exceeded the number of variables");
  }
}

CmReport is_cohen_macaulay(const RingPtr& R, uint64_t seed, const StructureConfig& cfg) {
  RingPtr amb = ambient_of(R);
  int dim = krull_dim(Ideal(amb, R->quotient_gens()));
  int dep = depth(R, seed, cfg);
  return CmReport{dim, dep, dim == dep};
}

Sop random_sop(const RingPtr& R, uint64_t seed, const StructureConfig& cfg) {
  RingPtr amb = ambient_of(R);
  int d = krull_dim(Ideal(amb, R->quotient_gens()));
  if (d == 0) return Sop{};
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(seed, "sop", t));
    std::vector<Polynomial> forms;
    for (int i = 0; i < d; ++i) {
      Polynomial l = random_linear_form(*R, rng);
      if (l.is_zero()) {
        forms.clear();
        break;
      }
      forms.push_back(std::move(l));
    }
    if (static_cast<int>(forms.size()) != d) continue;
    Ideal J(R, forms);
    if (krull_dim(J) == 0) return Sop{std::move(forms)};
  }
  throw GenericityError("random_sop: no parameter system found after " +
                        std::to_string(cfg.trials) +
                        " trials; retry with a larger field or more trials");
}

Sop lift_sop(const RingPtr& S_amb, const Ideal& p, const std::vector<Polynomial>& x,
             uint64_t seed, const StructureConfig& cfg) {
  if (S_amb->is_quotient()) throw InputError("lift_sop: ambient must be a polynomial ring");
  if (!same_ring(S_amb, p.ring())) throw InputError("lift_sop: prime lives in a different ring");
  const int n = S_amb->nvars();
  // x must be a parameter system of S/p
  {
    std::vector<Polynomial> gens = p.gens();
    gens.insert(gens.end(), x.begin(), x.end());
    if (krull_dim(Ideal(S_amb, gens)) != krull_dim(p) - static_cast<int>(x.size()))
      throw InputError("lift_sop: input is not a system of parameters modulo p");
  }
  const auto& cs = p.gens();
  std::vector<Polynomial> accepted;
  Sop out;
  for (size_t i = 0; i < x.size(); ++i) {
    const Polynomial& b = x[i];
    bool ok = false;
    for (int t = 0; t < cfg.trials && !ok; ++t) {
      Rng rng(derive_seed(seed, "lift_sop", i * cfg.trials + t));
      int64_t lambda = rng.nonzero_mod(S_amb->p());
      Polynomial a = b;
      int64_t lk = 1;
      for (const Polynomial& c : cs) {
        lk = S_amb->field().mul(lk, lambda);  // λ, λ^2, ..., λ^s
        a = S_amb->add(a, S_amb->scale(lk, c));
      }
      std::vector<Polynomial> cand = accepted;
      cand.push_back(a);
      if (krull_dim(Ideal(S_amb, cand)) == n - static_cast<int>(cand.size())) {
        accepted = std::move(cand);
        out.elements.push_back(std::move(a));
        ok = true;
      }
    }
    if (!ok)
      throw GenericityError("lift_sop: no admissible Vandermonde translate after " +
                            std::to_string(cfg.trials) + " trials");
  }
  return out;
}

namespace {

std::vector<Ideal> power_chain(const Ideal& I, int up_to) {
  std::vector<Ideal> P;
  P.reserve(up_to + 1);
  P.push_back(ideal_power(I, 0));
  P.push_back(reduced(I));
  for (int n = 2; n <= up_to; ++n) P.push_back(reduced(ideal_product(P.back(), I)));
  return P;
}

bool superficial_range_holds(const Ideal& I, const std::vector<Ideal>& P, const Polynomial& h,
                             int c, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    Ideal lhs = ideal_intersection(colon(P[n + 1], h), P[c]);
    // (I^{n+1} : h) ∩ I^c always contains I^n; equality is the inclusion into I^n
    bool inside = true;
    for (const Polynomial& g : lhs.gens()) {
      if (!contains(P[n], g)) {
        inside = false;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

SuperficialCertificate find_superficial(const Ideal& I, uint64_t seed, int N,
                                        const StructureConfig& cfg) {
  if (krull_dim(I) != 0) throw InputError("find_superficial: ideal is not m-primary");
  auto P = power_chain(I, N + 1);
  int reached = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(derive_seed(seed, "superficial", t));
    Polynomial h = I.ring()->zero();
    for (const Polynomial& g : I.gens())
      h = I.ring()->add(h, I.ring()->scale(rng.mod(I.ring()->p()), g));
    if (h.is_zero()) continue;
    for (int c = 1; c <= cfg.c_max; ++c) {
      int n = c;
      while (n <= N && superficial_range_holds(I, P, h, c, n, n)) ++n;
      reached = std::max(reached, n - 1);
      if (n > N) return SuperficialCertificate{h, c, c, N};
    }
  }
  throw GenericityError("find_superficial: no certificate after " + std::to_string(cfg.trials) +
                        " draws (best partial range n<=" + std::to_string(reached) +
                        "); retry with a larger field");
}

bool verify_superficial(const Ideal& I, const SuperficialCertificate& cert) {
  auto P = power_chain(I, cert.range_hi + 1);
  return superficial_range_holds(I, P, cert.h, cert.c, cert.range_lo, cert.range_hi);
}

std::optional<ReductionCertificate> reduction_check(const Ideal& J, const Ideal& I, int s_max) {
  if (!same_ring(J.ring(), I.ring())) throw InputError("reduction_check: ring mismatch");
  if (!ideal_contains(I, J)) throw InputError("reduction_check: J is not contained in I");
  auto P = power_chain(I, s_max + 1);
  for (int s = 0; s <= s_max; ++s) {
    Ideal lhs = ideal_product(J, P[s]);
    if (ideal_equal(lhs, P[s + 1])) return ReductionCertificate{s};
  }
  return std::nullopt;
}

DescentReport superficial_descent_check(const Ideal& I, const SuperficialCertificate& cert,
                                        const StructureConfig& cfg) {
  const RingPtr& Rp = I.ring();
  RingPtr amb = ambient_of(Rp);
  Ideal L(amb, Rp->quotient_gens());
  const int d = Rp->is_quotient() ? krull_dim(L) : Rp->nvars();
  if (d < 1) throw InputError("superficial descent needs dim >= 1");

  DescentReport rep;
  rep.above = fitted_evector(I, d, cfg.nmax);

  RingPtr Rq = Ring::quotient_of(Rp, {cert.h});
  Ideal Iq(Rq, I.gens());
  rep.below = fitted_evector(Iq, d - 1, cfg.nmax);

  // λ(0 :_R h) = λ((L : h) / L), zero exactly when h is a nonzerodivisor
  Ideal Lh = colon(L, cert.h);
  rep.torsion_length = finite_colength(L, Lh);

  rep.identities_hold = true;
  for (int i = 0; i <= d - 2; ++i)
    if (rep.above.e[i] != rep.below.e[i]) rep.identities_hold = false;
  // e_{d-1}(I/(h), R/hR) = e_{d-1}(I, R) + (-1)^{d-1} λ(0 : h); the worked
  // depth-zero examples pin the side the correction lives on.
  long sign = (d - 1) % 2 == 0 ? 1 : -1;
  if (rep.below.e[d - 1] != rep.above.e[d - 1] + sign * rep.torsion_length)
    rep.identities_hold = false;
  return rep;
}

}  // namespace chern
