#include "chern/groebner.hpp"

#include <algorithm>

namespace chern {

namespace {

// f - g, both sorted under ord
Polynomial merge_sub(const Ring& R, const TermOrder& ord, const Polynomial& f,
                     const Polynomial& g) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = ord.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{F.neg(b[j].coeff), b[j].mono});
      ++j;
    } else {
      int64_t s = F.sub(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back(Term{s, a[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial(std::move(out));
}

// f - c * m * g
Polynomial reduce_step(const Ring& R, const TermOrder& ord, const Polynomial& f, int64_t c,
                       const Monomial& m, const Polynomial& g) {
  return merge_sub(R, ord, f, R.mul_term(c, m, g));
}

Polynomial s_polynomial(const Ring& R, const TermOrder& ord, const Polynomial& f,
                        const Polynomial& g) {
  const PrimeField& F = R.field();
  Monomial L = lcm(f.lead().mono, g.lead().mono);
  Monomial uf = quotient(L, f.lead().mono);
  Monomial ug = quotient(L, g.lead().mono);
  Polynomial a = R.mul_term(F.inv(f.lead().coeff), uf, f);
  return merge_sub(R, ord, a, R.mul_term(F.inv(g.lead().coeff), ug, g));
}

struct CritPair {
  int i, j;
  Monomial l;
  int deg;
};

// Gebauer–Möller update: install h as the next basis element, pruning old
// pairs by the chain criterion and new pairs by divisibility + coprimality.
void update_pairs(const TermOrder& ord, std::vector<Polynomial>& basis,
                  std::vector<CritPair>& pairs, Polynomial h) {
  const int t = static_cast<int>(basis.size());
  const Monomial lmh = h.lead().mono;

  struct Cand {
    int k;
    Monomial l;
    bool cop;
  };
  std::vector<Cand> cand;
  cand.reserve(t);
  for (int k = 0; k < t; ++k)
    cand.push_back({k, lcm(basis[k].lead().mono, lmh), coprime(basis[k].lead().mono, lmh)});

  // chain criterion on old pairs
  std::vector<CritPair> kept;
  kept.reserve(pairs.size());
  for (CritPair& pr : pairs) {
    if (divides(lmh, pr.l) && cand[pr.i].l != pr.l && cand[pr.j].l != pr.l) continue;
    kept.push_back(std::move(pr));
  }
  pairs = std::move(kept);

  // minimal new pairs: strict divisors win, first of equal lcms wins
  std::vector<int> idx(cand.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = ord.compare(cand[a].l, cand[b].l);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<int> minimal;
  for (int k : idx) {
    bool drop = false;
    for (int m : minimal) {
      if (divides(cand[m].l, cand[k].l)) {
        drop = true;
        break;
      }
    }
    if (!drop) minimal.push_back(k);
  }

  for (int k : minimal) {
    if (cand[k].cop) continue;  // product criterion
    pairs.push_back(CritPair{cand[k].k, t, cand[k].l, cand[k].l.degree()});
  }
  basis.push_back(std::move(h));
}

std::vector<Polynomial> interreduce(const Ring& R, const TermOrder& ord,
                                    std::vector<Polynomial> basis) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lead().mono, b.lead().mono) < 0;
  });
  // a proper divisor precedes its multiple in any multiplicative order,
  // so one ascending pass finds the minimal generating leads
  std::vector<Polynomial> minimal;
  for (Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& m : minimal) {
      if (divides(m.lead().mono, g.lead().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(R.monic(normal_form(R, minimal[i], others, ord)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lead().mono, b.lead().mono) < 0;
  });
  return out;
}

}  // namespace

Polynomial normal_form(const Ring& R, const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& ord) {
  if (f.is_zero() || basis.empty()) return f;
  const PrimeField& F = R.field();
  Polynomial work = f;
  size_t pos = 0;  // terms before pos are already emitted into rem
  std::vector<Term> rem;
  while (pos < work.size()) {
    const Term& lt = work.terms()[pos];
    const Polynomial* red = nullptr;
    for (const Polynomial& g : basis) {
      if (divides(g.lead().mono, lt.mono)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    int64_t c = F.div(lt.coeff, red->lead().coeff);
    Monomial q = quotient(lt.mono, red->lead().mono);
    Polynomial tail(std::vector<Term>(work.terms().begin() + pos, work.terms().end()));
    work = reduce_step(R, ord, tail, c, q, *red);
    pos = 0;
  }
  return Polynomial(std::move(rem));
}

std::vector<Polynomial> buchberger(const Ring& R, std::vector<Polynomial> gens,
                                   const TermOrder& ord) {
  std::vector<Polynomial> input;
  input.reserve(gens.size());
  for (Polynomial& g : gens) {
    Polynomial h = R.normalize(g.terms(), ord);
    if (!h.is_zero()) input.push_back(R.monic(h));
  }
  std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lead().mono, b.lead().mono) < 0;
  });

  std::vector<Polynomial> basis;
  std::vector<CritPair> pairs;
  for (Polynomial& g : input) {
    Polynomial h = normal_form(R, g, basis, ord);
    if (h.is_zero()) continue;
    if (h.lead().mono.is_one()) return {R.one()};
    update_pairs(ord, basis, pairs, R.monic(h));
  }

  while (!pairs.empty()) {
    auto it =
        std::min_element(pairs.begin(), pairs.end(), [&](const CritPair& a, const CritPair& b) {
          if (a.deg != b.deg) return a.deg < b.deg;
          int c = ord.compare(a.l, b.l);
          if (c != 0) return c < 0;
          if (a.i != b.i) return a.i < b.i;
          return a.j < b.j;
        });
    CritPair pr = *it;
    pairs.erase(it);
    // the S-polynomial of two monomials vanishes identically
    if (basis[pr.i].is_monomial() && basis[pr.j].is_monomial()) continue;
    Polynomial s = s_polynomial(R, ord, basis[pr.i], basis[pr.j]);
    Polynomial h = normal_form(R, s, basis, ord);
    if (h.is_zero()) continue;
    if (h.lead().mono.is_one()) return {R.one()};
    update_pairs(ord, basis, pairs, R.monic(h));
  }
  return interreduce(R, ord, std::move(basis));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return normal_form(*I.ring(), I.ring()->normalize(f.terms()), I.groebner(), I.ring()->order());
}

bool contains(const Ideal& I, const Polynomial& f) { return normal_form(f, I).is_zero(); }

// ----- ideal calculus -----

namespace {

void check_same_ring(const Ideal& A, const Ideal& B) {
  if (!same_ring(A.ring(), B.ring())) throw InputError("ideal operands live in different rings");
}

// F_p[@t, x...] with the elimination order for @t
RingPtr aux_ring(const Ring& R) {
  std::vector<std::string> vars;
  vars.reserve(R.nvars() + 1);
  vars.push_back("@t");
  for (const auto& v : R.vars()) vars.push_back(v);
  return Ring::make(R.p(), std::move(vars), TermOrder::elimination(1));
}

Monomial lift_mono(const Monomial& m) {
  std::vector<int32_t> e;
  e.reserve(m.nvars() + 1);
  e.push_back(0);
  for (int i = 0; i < m.nvars(); ++i) e.push_back(m.exp(i));
  return Monomial(std::move(e));
}

Polynomial lift_poly(const Ring& aux, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) terms.push_back(Term{t.coeff, lift_mono(t.mono)});
  return aux.normalize(std::move(terms));
}

Polynomial drop_aux(const Ring& R, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    std::vector<int32_t> e;
    e.reserve(t.mono.nvars() - 1);
    for (int i = 1; i < t.mono.nvars(); ++i) e.push_back(t.mono.exp(i));
    terms.push_back(Term{t.coeff, Monomial(std::move(e))});
  }
  return R.normalize(std::move(terms));
}

bool uses_aux(const Polynomial& f) {
  for (const Term& t : f.terms())
    if (t.mono.exp(0) > 0) return true;
  return false;
}

// intersection of plain generator lists, no quotient folding
std::vector<Polynomial> intersect_generators(const Ring& R, const std::vector<Polynomial>& ga,
                                             const std::vector<Polynomial>& gb) {
  if (ga.empty() || gb.empty()) return {};
  RingPtr aux = aux_ring(R);
  Polynomial t = aux->variable(0);
  Polynomial one_minus_t = aux->sub(aux->one(), t);
  std::vector<Polynomial> gens;
  gens.reserve(ga.size() + gb.size());
  for (const Polynomial& g : ga) gens.push_back(aux->mul(t, lift_poly(*aux, g)));
  for (const Polynomial& g : gb) gens.push_back(aux->mul(one_minus_t, lift_poly(*aux, g)));
  auto gbasis = buchberger(*aux, std::move(gens), aux->order());
  std::vector<Polynomial> proj;
  for (const Polynomial& g : gbasis)
    if (!uses_aux(g)) proj.push_back(drop_aux(R, g));
  return proj;
}

// exact division by a single polynomial; remainder must vanish
Polynomial exact_divide(const Ring& R, Polynomial g, const Polynomial& f) {
  const PrimeField& F = R.field();
  std::vector<Term> quot;
  while (!g.is_zero()) {
    const Term& lt = g.lead();
    if (!divides(f.lead().mono, lt.mono))
      throw InternalError("exact division: leading term not divisible");
    int64_t c = F.div(lt.coeff, f.lead().coeff);
    Monomial q = quotient(lt.mono, f.lead().mono);
    quot.push_back(Term{c, q});
    g = reduce_step(R, R.order(), g, c, q, f);
  }
  return R.normalize(std::move(quot));
}

}  // namespace

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  check_same_ring(A, B);
  std::vector<Polynomial> gens = A.gens();
  gens.insert(gens.end(), B.gens().begin(), B.gens().end());
  return Ideal(A.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
  check_same_ring(A, B);
  const Ring& R = *A.ring();
  std::vector<Polynomial> gens;
  gens.reserve(A.gens().size() * B.gens().size());
  for (const Polynomial& a : A.gens())
    for (const Polynomial& b : B.gens()) gens.push_back(R.mul(a, b));
  return Ideal(A.ring(), std::move(gens));
}

Ideal reduced(const Ideal& I) { return Ideal(I.ring(), I.groebner()); }

Ideal ideal_power(const Ideal& A, int n) {
  if (n < 0) throw InputError("negative ideal power");
  if (n == 0) return Ideal(A.ring(), {A.ring()->one()});
  Ideal P = A;
  for (int k = 1; k < n; ++k) P = reduced(ideal_product(P, A));
  return P;
}

Ideal ideal_intersection(const Ideal& A, const Ideal& B) {
  check_same_ring(A, B);
  return Ideal(A.ring(), intersect_generators(*A.ring(), A.effective_gens(), B.effective_gens()));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  const Ring& R = *I.ring();
  Polynomial fn = R.normalize(f.terms());
  if (fn.is_zero()) throw InputError("colon by the zero element");
  // (A : f) = (1/f)(A ∩ (f)) in the ambient polynomial ring, with
  // A = L + I the effective ideal. Every member of A ∩ (f) divides by f.
  auto inter = intersect_generators(R, I.effective_gens(), {fn});
  std::vector<Polynomial> gens;
  gens.reserve(inter.size());
  for (const Polynomial& g : inter) gens.push_back(exact_divide(R, g, fn));
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  std::optional<Ideal> acc;
  for (const Polynomial& g : J.gens()) {
    Ideal c = colon(I, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  if (!acc) throw InputError("colon by the zero ideal");
  return *acc;
}

std::pair<Ideal, int> saturate(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  if (J.gens().empty()) throw InputError("saturation by the zero ideal");
  Ideal cur = reduced(I);
  for (int e = 0; e <= 50; ++e) {
    Ideal nxt = reduced(colon(cur, J));
    if (ideal_equal(nxt, cur)) return {cur, e};
    cur = nxt;
  }
  throw InternalError("saturation did not stabilize within 50 colon steps");
}

bool is_unit_ideal(const Ideal& A) {
  const auto& gb = A.groebner();
  return gb.size() == 1 && gb.front().lead().mono.is_one();
}

bool ideal_contains(const Ideal& A, const Ideal& B) {
  check_same_ring(A, B);
  for (const Polynomial& g : B.gens())
    if (!contains(A, g)) return false;
  return true;
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
  check_same_ring(A, B);
  return A.groebner() == B.groebner();
}

int krull_dim(const Ideal& I) {
  if (is_unit_ideal(I)) throw InputError("krull_dim of the unit ideal");
  const auto& gb = I.groebner();
  const int n = I.ring()->nvars();
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const Polynomial& g : gb) lts.push_back(g.lead().mono);
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& m : lts) {
      bool supported = true;
      for (int i = 0; i < n; ++i) {
        if (m.exp(i) > 0 && !(mask & (1u << i))) {
          supported = false;
          break;
        }
      }
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

namespace {

void enumerate_standard(const std::vector<Monomial>& lts, const std::vector<int32_t>& bounds,
                        int max_degree, int nvars, std::vector<int32_t>& cur, int i, int deg,
                        std::vector<Monomial>& out) {
  if (i == nvars) {
    Monomial m(cur);
    for (const Monomial& lt : lts)
      if (divides(lt, m)) return;
    out.push_back(std::move(m));
    return;
  }
  for (int32_t e = 0; e <= bounds[i]; ++e) {
    if (max_degree >= 0 && deg + e > max_degree) break;
    cur[i] = e;
    enumerate_standard(lts, bounds, max_degree, nvars, cur, i + 1, deg + e, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const Ideal& I) {
  const auto& gb = I.groebner();
  if (gb.size() == 1 && gb.front().lead().mono.is_one()) return {};
  const int n = I.ring()->nvars();
  std::vector<Monomial> lts;
  for (const Polynomial& g : gb) lts.push_back(g.lead().mono);
  std::vector<int32_t> bounds(n, -1);
  for (const Monomial& m : lts) {
    for (int i = 0; i < n; ++i) {
      if (m.exp(i) > 0 && m.exp(i) == m.degree()) {
        if (bounds[i] < 0 || m.exp(i) - 1 < bounds[i]) bounds[i] = m.exp(i) - 1;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (bounds[i] < 0)
      throw InputError("not m-primary/zero-dimensional: no pure power of " +
                       I.ring()->var_name(i) + " in the leading-term ideal");
  std::vector<Monomial> out;
  std::vector<int32_t> cur(n, 0);
  enumerate_standard(lts, bounds, -1, n, cur, 0, 0, out);
  return out;
}

std::vector<Monomial> standard_monomials_up_to(const Ideal& I, int max_degree) {
  const auto& gb = I.groebner();
  if (gb.size() == 1 && gb.front().lead().mono.is_one()) return {};
  const int n = I.ring()->nvars();
  std::vector<Monomial> lts;
  for (const Polynomial& g : gb) lts.push_back(g.lead().mono);
  std::vector<int32_t> bounds(n, static_cast<int32_t>(max_degree));
  std::vector<Monomial> out;
  std::vector<int32_t> cur(n, 0);
  enumerate_standard(lts, bounds, max_degree, n, cur, 0, 0, out);
  return out;
}

long length_zero_dim(const Ideal& I) { return static_cast<long>(standard_monomials(I).size()); }

DoubleAnnihilatorResult double_annihilator_test(const Ideal& L0, const Ideal& L) {
  check_same_ring(L0, L);
  if (is_unit_ideal(L0) || is_unit_ideal(L))
    throw InputError("double annihilator: operands must be proper");
  if (!ideal_contains(L, L0)) throw InputError("double annihilator: L0 must be contained in L");
  Ideal A = L.gens().empty() ? Ideal(L0.ring(), {L0.ring()->one()}) : colon(L0, L);
  Ideal B = A.gens().empty() ? Ideal(L0.ring(), {L0.ring()->one()}) : colon(L0, A);
  // B ⊇ L always; the test is the reverse inclusion.
  for (const Polynomial& g : B.groebner()) {
    if (!contains(L, g)) return {false, g};
  }
  if (!ideal_contains(B, L)) throw InternalError("double annihilator: L not inside L0:(L0:L)");
  return {true, std::nullopt};
}

}  // namespace chern
