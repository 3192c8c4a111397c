#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chern/poly_text.hpp"
#include "chern/rng.hpp"

using namespace chern;

namespace {

RingPtr S2() { return Ring::make(32003, {"x", "y"}); }

Monomial mono(std::vector<int32_t> e) { return Monomial(std::move(e)); }

Monomial random_monomial(Rng& rng, int nvars, int max_exp) {
  std::vector<int32_t> e(nvars);
  for (auto& x : e) x = static_cast<int32_t>(rng.below(max_exp + 1));
  return Monomial(std::move(e));
}

Polynomial random_poly(const RingPtr& R, Rng& rng, int terms, int max_exp) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back(Term{rng.mod(R->p()), random_monomial(rng, R->nvars(), max_exp)});
  return R->normalize(std::move(ts));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField F(32003);
  CHECK(F.add(32000, 10) == 7);
  CHECK(F.mul(F.inv(1234), 1234) == 1);
  CHECK(F.neg(0) == 0);
  CHECK(F.pow(5, 32002) == 1);  // Fermat
  CHECK(F.sub(3, 5) == 32001);
  CHECK_THROWS_AS(PrimeField(32004), InputError);
  CHECK_THROWS_AS(PrimeField(2), InputError);
  CHECK_THROWS_AS(F.inv(0), InputError);
}

TEST_CASE("grevlex comparisons") {
  TermOrder g = TermOrder::grevlex();
  // same degree: reverse-lex on the last differing exponent
  CHECK(g.compare(mono({2, 0}), mono({1, 1})) > 0);  // x^2 > xy
  CHECK(g.compare(mono({1, 1}), mono({1, 1})) == 0);
  CHECK(g.compare(mono({1, 0}), mono({0, 3})) < 0);  // deg 1 < deg 3
  // arity mismatch
  CHECK_THROWS_AS(g.compare(mono({1, 0}), mono({1, 0, 0})), InputError);
}

TEST_CASE("lex and elimination orders") {
  TermOrder lx = TermOrder::lex();
  CHECK(lx.compare(mono({1, 0}), mono({0, 5})) > 0);
  TermOrder el = TermOrder::elimination(1);
  // any power of the first variable dominates anything without it
  CHECK(el.compare(mono({1, 0, 0}), mono({0, 7, 9})) > 0);
  CHECK(el.compare(mono({0, 2, 0}), mono({0, 1, 1})) > 0);  // grevlex on the tail block
}

TEST_CASE("variable permutation swaps significance") {
  TermOrder g = TermOrder::grevlex();
  TermOrder swapped = TermOrder::grevlex().with_permutation({1, 0});
  CHECK(g.compare(mono({1, 0}), mono({0, 1})) > 0);        // x > y
  CHECK(swapped.compare(mono({1, 0}), mono({0, 1})) < 0);  // y > x
}

TEST_CASE("term order is a total multiplicative order") {
  Rng rng(7);
  TermOrder g = TermOrder::grevlex();
  for (int i = 0; i < 300; ++i) {
    Monomial u = random_monomial(rng, 3, 5);
    Monomial v = random_monomial(rng, 3, 5);
    Monomial w = random_monomial(rng, 3, 5);
    int c = g.compare(u, v);
    CHECK(c == -g.compare(v, u));
    if (c < 0) CHECK(g.compare(mul(u, w), mul(v, w)) < 0);  // u < v => uw < vw
    CHECK(g.compare(Monomial::one(3), u) <= 0);             // 1 is minimal
  }
}

TEST_CASE("polynomial arithmetic identities") {
  RingPtr R = S2();
  Polynomial f = parse_poly(R, "x + y");
  Polynomial g = parse_poly(R, "x - y");
  CHECK(R->add(f, R->zero()) == f);
  CHECK(R->mul(f, g) == parse_poly(R, "x^2 - y^2"));
  // over p = 5: 3x * 2x = x^2
  RingPtr R5 = Ring::make(5, {"x", "y"});
  CHECK(R5->mul(parse_poly(R5, "3x"), parse_poly(R5, "2x")) == parse_poly(R5, "x^2"));
}

TEST_CASE("ring axioms on random triples") {
  RingPtr R = S2();
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    Polynomial a = random_poly(R, rng, 4, 3);
    Polynomial b = random_poly(R, rng, 4, 3);
    Polynomial c = random_poly(R, rng, 4, 3);
    CHECK(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)));
    CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
    CHECK(R->add(a, b) == R->add(b, a));
  }
}

TEST_CASE("normal form is canonical under construction order") {
  RingPtr R = S2();
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    std::vector<Term> ts;
    for (int k = 0; k < 6; ++k)
      ts.push_back(Term{rng.mod(R->p()), random_monomial(rng, 2, 4)});
    std::vector<Term> shuffled = ts;
    for (size_t k = shuffled.size(); k > 1; --k)
      std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
    CHECK(R->normalize(ts) == R->normalize(shuffled));
  }
}

TEST_CASE("polynomial text round trip") {
  RingPtr R = S2();
  Polynomial f = parse_poly(R, "3*x^2*y - x + 12");
  CHECK(parse_poly(R, R->to_string(f)) == f);
  CHECK(R->to_string(R->zero()) == "0");
  CHECK_THROWS_AS(parse_poly(R, "x z"), InputError);   // unknown variable
  CHECK_THROWS_AS(parse_poly(R, "x y"), InputError);   // missing '*'
  CHECK_THROWS_AS(parse_poly(R, "3*"), InputError);
  // negative coefficients normalize mod p
  CHECK(parse_poly(R, "-x") == R->scale(32002, parse_poly(R, "x")));
}

TEST_CASE("substitution composes linearly") {
  RingPtr R = S2();
  // x -> x + y, y -> y
  std::vector<Polynomial> images = {parse_poly(R, "x + y"), parse_poly(R, "y")};
  CHECK(R->substitute(parse_poly(R, "x^2"), images) == parse_poly(R, "x^2 + 2*x*y + y^2"));
  CHECK(R->substitute(parse_poly(R, "x*y"), images) == parse_poly(R, "x*y + y^2"));
}

TEST_CASE("quotient ring construction guards") {
  RingPtr R = S2();
  CHECK_THROWS_AS(Ring::quotient_of(R, {R->one()}), InputError);
  CHECK_THROWS_AS(Ring::make(32003, {"x", "x"}), InputError);
  RingPtr Q = Ring::quotient_of(R, parse_polys(R, {"x^2"}));
  CHECK(Q->is_quotient());
  CHECK(same_ring(*R, *R));
  CHECK(!same_ring(*R, *Q));
}
