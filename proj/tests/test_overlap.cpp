#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xxzlbf/overlap.hpp"

#include <random>

using namespace xxz;

TEST_CASE("overlap polynomials: hand-expanded small cases") {
  CHECK(overlap_polynomial(0, 0) == IntPolynomial(1));
  CHECK(overlap_polynomial(2, 0) == IntPolynomial{1, 0, 1});            // x^2 + 1
  CHECK(overlap_polynomial(2, 1) == IntPolynomial{1, 1, 1});            // x^2 + x + 1
  CHECK(overlap_polynomial(3, 0) == IntPolynomial{2, 2, 2});
  CHECK(overlap_polynomial(2, 2) == IntPolynomial{2, 2, 3, 2, 2});
  CHECK(overlap_polynomial(4, 0).eval<Rational>(Rational(1)) == Rational(33));
  CHECK(overlap_polynomial(1, 1).is_zero());
  CHECK(overlap_polynomial(3, 5).is_zero());
  CHECK_THROWS_AS(overlap_polynomial(-1, 2), ArgumentError);
}

TEST_CASE("determinant evaluation matches the expanded polynomial") {
  std::mt19937 rng(71);
  for (int n1 = 0; n1 <= 5; ++n1) {
    for (int n2 = 0; n2 <= 5; ++n2) {
      const IntPolynomial poly = overlap_polynomial(n1, n2);
      for (int trial = 0; trial < 3; ++trial) {
        const Rational x(1 + static_cast<int>(rng() % 12),
                         1 + static_cast<int>(rng() % 5));
        CHECK(overlap_determinant(n1, n2, x) == poly.eval<Rational>(x));
      }
    }
  }
}

TEST_CASE("overlaps are symmetric in the two blocks and positive for x > 0") {
  CHECK(overlap_polynomial(2, 1) == overlap_polynomial(1, 2));
  CHECK(overlap_polynomial(4, 1) == overlap_polynomial(1, 4));
  CHECK(overlap_polynomial(3, 2) == overlap_polynomial(2, 3));
  for (int n1 = 0; n1 <= 4; ++n1)
    for (int n2 = n1; n2 <= 4; ++n2) {
      if (!overlap_defined(n1, n2)) continue;
      for (const Rational& x : {Rational(1, 7), Rational(1), Rational(9, 2)})
        CHECK(overlap_determinant(n1, n2, x) > 0);
    }
}

TEST_CASE("ground-state contraction reproduces the determinant up to a fixed sign") {
  GroundStateCache cache;
  for (const Rational& x : {Rational(1, 3), Rational(2)}) {
    CHECK(overlap_contraction(2, 0, x, cache) == x * x + 1);
    CHECK(overlap_contraction(0, 0, x, cache) == Rational(1));
    CHECK(overlap_contraction(1, 1, x, cache) == Rational(0));
  }
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      const Rational det13 = overlap_determinant(n1, n2, Rational(1, 3));
      const Rational det2 = overlap_determinant(n1, n2, Rational(2));
      const Rational con13 = overlap_contraction(n1, n2, Rational(1, 3), cache);
      const Rational con2 = overlap_contraction(n1, n2, Rational(2), cache);
      if (!overlap_defined(n1, n2)) {
        CHECK(con13 == 0);
        CHECK(con2 == 0);
        continue;
      }
      // The relative sign is a property of the pair, not of x.
      const int sign13 = con13 == det13 ? 1 : -1;
      if (sign13 < 0) CHECK(con13 == -det13);
      CHECK(con2 == sign13 * det2);
    }
}

TEST_CASE("fidelity ratio and its logarithm") {
  CHECK(fidelity_ratio(2, 2, Rational(1)) == Rational(121, 132));

  const Real expected = log(Real(132) / Real(121));
  CHECK(abs(log_fidelity(2, 2, Rational(1)) - expected) < Real("1e-55"));

  // Splitting off an empty block costs nothing.
  for (int n = 0; n <= 5; ++n) {
    CHECK(fidelity_ratio(n, 0, Rational(7, 5)) == Rational(1));
    CHECK(abs(log_fidelity(n, 0, Rational(7, 5))) < Real("1e-57"));
  }

  GroundStateCache cache;
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      if (!overlap_defined(n1, n2)) {
        CHECK_THROWS_AS(fidelity_ratio(n1, n2, Rational(2)), DegeneracyError);
        CHECK_THROWS_AS(log_fidelity(n1, n2, Rational(2)), DegeneracyError);
        continue;
      }
      const Rational ratio = fidelity_ratio(n1, n2, Rational(2));
      CHECK(fidelity_ratio_contraction(n1, n2, Rational(2), cache) == ratio);
      CHECK(abs(log_fidelity(n1, n2, Rational(2)) + log(to_real(ratio))) < Real("1e-55"));
      CHECK(ratio > 0);
      CHECK(ratio <= 1);
    }
}
