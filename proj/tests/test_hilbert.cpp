#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chern/groebner.hpp"
#include "chern/hilbert.hpp"
#include "chern/poly_text.hpp"

using namespace chern;

namespace {

RingPtr S2() { return Ring::make(32003, {"x", "y"}); }

RingPtr two_planes() {
  RingPtr S4 = Ring::make(32003, {"x1", "x2", "x3", "x4"});
  return Ring::quotient_of(S4, parse_polys(S4, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"}));
}

RingPtr curve345() {
  RingPtr S3 = Ring::make(32003, {"x", "y", "z"});
  return Ring::quotient_of(S3, parse_polys(S3, {"y^2-x*z", "x^3-y*z", "x^2*y-z^2"}));
}

std::vector<long> evec(const EVector& e) { return e.e; }

}  // namespace

TEST_CASE("hs_sample on the polynomial ring") {
  RingPtr S = S2();
  Ideal m = parse_ideal(S, {"x", "y"});
  HilbertSamuelTable T = hs_sample(m, 6);
  CHECK(T.values == std::vector<long>{1, 3, 6, 10, 15, 21, 28});  // binom(n+2, 2)
}

TEST_CASE("hs_sample on the two-planes ring hits (n+1)(n+3)") {
  RingPtr R = two_planes();
  Ideal J = parse_ideal(R, {"x1+x3", "x2+x4"});
  HilbertSamuelTable T = hs_sample(J, 6);
  CHECK(T.values == std::vector<long>{3, 8, 15, 24, 35, 48, 63});
}

TEST_CASE("hs_sample on the monomial curve with a parameter") {
  RingPtr C = curve345();
  Ideal I = parse_ideal(C, {"x"});
  HilbertSamuelTable T = hs_sample(I, 6);
  CHECK(T.values == std::vector<long>{3, 6, 9, 12, 15, 18, 21});  // multiplicity three
}

TEST_CASE("linear fast path agrees with the generic power path") {
  RingPtr R = two_planes();
  Ideal J = parse_ideal(R, {"x1+x3", "x2+x4"});
  CHECK(hs_sample(J, 6, true).values == hs_sample(J, 6, false).values);

  RingPtr S = S2();
  Ideal mixed = parse_ideal(S, {"x + 3*y", "y"});
  CHECK(hs_sample(mixed, 6, true).values == hs_sample(mixed, 6, false).values);
}

TEST_CASE("hs_sample rejects non-primary ideals and tiny N") {
  RingPtr S = S2();
  CHECK_THROWS_AS(hs_sample(parse_ideal(S, {"x"}), 8), InputError);
  CHECK_THROWS_AS(hs_sample(parse_ideal(S, {"x", "y"}), 3), InputError);
}

TEST_CASE("fit on binomial tables") {
  // polynomial ring: e = (1, 0, 0)
  std::vector<long> vals;
  for (int n = 0; n <= 10; ++n) vals.push_back(static_cast<long>(binomial(n + 2, 2)));
  EVector e = fit_evector(vals, 2);
  CHECK(evec(e) == std::vector<long>{1, 0, 0});
  CHECK(e.n0 == 0);

  // (n+1)(n+3) = 2 binom(n+2,2) + binom(n+1,1) - 1 + ... : e = (2, -1, 0)
  vals.clear();
  for (int n = 0; n <= 10; ++n) vals.push_back((n + 1) * (n + 3));
  CHECK(evec(fit_evector(vals, 2)) == std::vector<long>{2, -1, 0});

  // 2n^2 + 5n + 3 = 4 binom(n+2,2) - (n+1): e = (4, 1, 0)
  vals.clear();
  for (int n = 0; n <= 10; ++n) vals.push_back(2 * n * n + 5 * n + 3);
  CHECK(evec(fit_evector(vals, 2)) == std::vector<long>{4, 1, 0});
}

TEST_CASE("fit reports the postulation index") {
  // agrees with n + 2 only from n = 1 on
  std::vector<long> vals = {1, 3, 4, 5, 6, 7, 8, 9};
  EVector e = fit_evector(vals, 1);
  CHECK(evec(e) == std::vector<long>{1, -1});
  CHECK(e.n0 == 1);
}

TEST_CASE("fit instability is loud, never silent") {
  std::vector<long> vals = {1, 3, 6};  // too short
  CHECK_THROWS_AS(fit_evector(vals, 2), UnstableError);
  // tail still moving: d-th differences not constant
  std::vector<long> moving = {1, 3, 7, 16, 35, 71, 130, 219};
  CHECK_THROWS_AS(fit_evector(moving, 1), UnstableError);
}

TEST_CASE("fitted_evector guards against pseudo-stabilization") {
  RingPtr R = two_planes();
  Ideal J = parse_ideal(R, {"x1+x3", "x2+x4"});
  EVector e = fitted_evector(J, 2, 12);
  CHECK(evec(e) == std::vector<long>{2, -1, 0});
  // maximal ideal of the same ring: e = (2, 0, -1)
  Ideal m = parse_ideal(R, {"x1", "x2", "x3", "x4"});
  CHECK(evec(fitted_evector(m, 2, 12)) == std::vector<long>{2, 0, -1});
}

TEST_CASE("monomial complete intersections multiply multiplicities") {
  RingPtr S = S2();
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 2; ++b) {
      Ideal I = parse_ideal(S, {"x^" + std::to_string(a), "y^" + std::to_string(b)});
      EVector e = fitted_evector(I, 2, 10);
      CHECK(e.e0() == a * b);
      CHECK(e.e[1] == 0);
      CHECK(e.e[2] == 0);
    }
  }
}

TEST_CASE("graded e-vectors and the shift law") {
  RingPtr S = S2();
  GradedSubmodule M(S, 1, {{parse_poly(S, "x")}, {parse_poly(S, "y")}});
  EVector nat = graded_evector(M, GradingConvention::Natural);
  EVector shf = graded_evector(M, GradingConvention::Shifted);
  CHECK(evec(nat) == std::vector<long>{1, 0, -1});
  CHECK(evec(shf) == std::vector<long>{1, -1, 0});
  CHECK(shf.e1() == nat.e1() - 1 * nat.e0());  // a = 1

  GradedSubmodule F(S, 2, {{S->one(), S->zero()}, {S->zero(), S->one()}});
  CHECK(evec(graded_evector(F, GradingConvention::Natural)) == std::vector<long>{2, 0, 0});
  CHECK(evec(graded_evector(F, GradingConvention::Shifted)) == std::vector<long>{2, 0, 0});

  GradedSubmodule M2(S, 1, {{parse_poly(S, "x^2")}, {parse_poly(S, "x*y")},
                            {parse_poly(S, "y^2")}});
  EVector nat2 = graded_evector(M2, GradingConvention::Natural);
  EVector shf2 = graded_evector(M2, GradingConvention::Shifted);
  CHECK(evec(nat2) == std::vector<long>{1, 0, -3});
  CHECK(evec(shf2) == std::vector<long>{1, -2, 0});
  CHECK(shf2.e1() == nat2.e1() - 2 * nat2.e0());
}

TEST_CASE("adic and graded routes agree for the irrelevant filtration") {
  RingPtr R = two_planes();
  Ideal m = parse_ideal(R, {"x1", "x2", "x3", "x4"});
  EVector adic = fitted_evector(m, 2, 12);
  EVector graded = graded_evector(R, GradingConvention::Natural);
  CHECK(adic.e == graded.e);
}

TEST_CASE("finite colength of nested ideals") {
  RingPtr S = S2();
  // (x) / (x^2, xy) has length one, spanned by the class of x
  Ideal small = parse_ideal(S, {"x^2", "x*y"});
  Ideal big = parse_ideal(S, {"x"});
  CHECK(finite_colength(small, big) == 1);
  CHECK(finite_colength(big, big) == 0);
  CHECK_THROWS_AS(finite_colength(big, small), InputError);
  // infinite quotient: (x) over (x^2) keeps growing
  CHECK_THROWS_AS(finite_colength(parse_ideal(S, {"x^2"}), big), UnstableError);
}
