#include "chern/ring.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace chern {

RingPtr Ring::make(int64_t p, std::vector<std::string> vars, TermOrder ord) {
  PrimeField f(p);
  if (vars.empty()) throw InputError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '@'))
      throw InputError("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  return RingPtr(new Ring(f, std::move(vars), std::move(ord), {}));
}

RingPtr Ring::quotient_of(const RingPtr& base, const std::vector<Polynomial>& extra) {
  if (!base) throw InputError("null base ring");
  std::vector<Polynomial> quot = base->quot_;
  for (const Polynomial& g : extra) {
    Polynomial h = base->normalize(g.terms());
    if (h.is_zero()) continue;
    if (h.degree() == 0) throw InputError("quotient generator is a unit; quotient ring collapses");
    quot.push_back(std::move(h));
  }
  return RingPtr(new Ring(base->fld_, base->vars_, base->ord_, std::move(quot)));
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

void Ring::check_arity(const Polynomial& f) const {
  for (const Term& t : f.terms())
    if (t.mono.nvars() != nvars()) throw InputError("polynomial/ring arity mismatch");
}

Polynomial Ring::constant(int64_t c) const {
  int64_t r = fld_.reduce(c);
  if (r == 0) return Polynomial();
  return Polynomial({Term{r, Monomial::one(nvars())}});
}

Polynomial Ring::variable(int i) const {
  return Polynomial({Term{1, Monomial::var(nvars(), i)}});
}

Polynomial Ring::monomial(int64_t c, Monomial m) const {
  int64_t r = fld_.reduce(c);
  if (r == 0) return Polynomial();
  if (m.nvars() != nvars()) throw InputError("monomial/ring arity mismatch");
  return Polynomial({Term{r, std::move(m)}});
}

Polynomial Ring::normalize(std::vector<Term> terms, const TermOrder& ord) const {
  for (Term& t : terms) {
    if (t.mono.nvars() != nvars()) throw InputError("polynomial/ring arity mismatch");
    t.coeff = fld_.reduce(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = fld_.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  return Polynomial(std::move(out));
}

Polynomial Ring::add(const Polynomial& f, const Polynomial& g) const {
  check_arity(f);
  check_arity(g);
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = ord_.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      int64_t s = fld_.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back(Term{s, a[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Ring::neg(const Polynomial& f) const {
  std::vector<Term> out = f.terms();
  for (Term& t : out) t.coeff = fld_.neg(t.coeff);
  return Polynomial(std::move(out));
}

Polynomial Ring::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial Ring::scale(int64_t c, const Polynomial& f) const {
  int64_t r = fld_.reduce(c);
  if (r == 0) return Polynomial();
  std::vector<Term> out = f.terms();
  for (Term& t : out) t.coeff = fld_.mul(t.coeff, r);
  return Polynomial(std::move(out));
}

Polynomial Ring::mul_term(int64_t c, const Monomial& m, const Polynomial& f) const {
  int64_t r = fld_.reduce(c);
  if (r == 0) return Polynomial();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms())
    out.push_back(Term{fld_.mul(t.coeff, r), chern::mul(t.mono, m)});
  return Polynomial(std::move(out));  // multiplicative order keeps sortedness
}

Polynomial Ring::mul(const Polynomial& f, const Polynomial& g) const {
  check_arity(f);
  check_arity(g);
  if (f.is_zero() || g.is_zero()) return Polynomial();
  std::vector<Term> acc;
  acc.reserve(f.size() * g.size());
  for (const Term& a : f.terms())
    for (const Term& b : g.terms())
      acc.push_back(Term{fld_.mul(a.coeff, b.coeff), chern::mul(a.mono, b.mono)});
  return normalize(std::move(acc));
}

Polynomial Ring::monic(const Polynomial& f) const {
  if (f.is_zero()) return f;
  return scale(fld_.inv(f.lead().coeff), f);
}

Polynomial Ring::pow(const Polynomial& f, int e) const {
  if (e < 0) throw InputError("negative polynomial power");
  Polynomial r = one();
  for (int i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

Polynomial Ring::substitute(const Polynomial& f, const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw InputError("substitution needs one image per variable");
  std::vector<std::vector<Polynomial>> pw(images.size());
  for (size_t j = 0; j < images.size(); ++j) pw[j].push_back(one());
  Polynomial out = zero();
  for (const Term& t : f.terms()) {
    Polynomial acc = constant(t.coeff);
    for (int j = 0; j < nvars(); ++j) {
      int e = t.mono.exp(j);
      if (e == 0) continue;
      while (static_cast<int>(pw[j].size()) <= e) pw[j].push_back(mul(pw[j].back(), images[j]));
      acc = mul(acc, pw[j][e]);
    }
    out = add(out, acc);
  }
  return out;
}

std::string Ring::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!first) os << "*";
    os << vars_[i];
    if (m.exp(i) > 1) os << "^" << m.exp(i);
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string Ring::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    int64_t c = fld_.centered(t.coeff);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    int64_t a = c < 0 ? -c : c;
    if (t.mono.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << to_string(t.mono);
    }
    first = false;
  }
  return os.str();
}

bool same_ring(const Ring& a, const Ring& b) {
  return a.fld_ == b.fld_ && a.vars_ == b.vars_ && a.ord_ == b.ord_ && a.quot_ == b.quot_;
}

}  // namespace chern
