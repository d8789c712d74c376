#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xxzlbf/laurent.hpp"

#include <random>
#include <utility>
#include <vector>

using namespace xxz;

namespace {

LaurentQ random_laurent(std::mt19937& rng, int nvars) {
  LaurentQ p = LaurentQ::zero(nvars);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    LaurentQ::Exponents e(nvars);
    for (int v = 0; v < nvars; ++v) e[v] = static_cast<int>(rng() % 7) - 3;
    const Rational c(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
    p += LaurentQ::monomial(nvars, std::move(e), c);
  }
  return p;
}

}  // namespace

TEST_CASE("construction and basic queries") {
  const LaurentQ zero = LaurentQ::zero(3);
  CHECK(zero.is_zero());
  CHECK(zero.nvars() == 3);
  CHECK(zero.degree_range(0) == std::pair{0, 0});

  const LaurentQ z = LaurentQ::var_pow(2, 1, -4, Rational(5));
  CHECK(z.term_count() == 1);
  CHECK(z.degree_range(1) == std::pair{-4, -4});
  CHECK(z.coeff({0, -4}) == Rational(5));
  CHECK(z.coeff({0, 0}) == Rational(0));

  CHECK_THROWS_AS(LaurentQ::monomial(2, {1}, Rational(1)), ArgumentError);
  CHECK(LaurentQ::constant(2, Rational(0)).is_zero());
  CHECK(LaurentQ(3).is_constant());
}

TEST_CASE("ring axioms and constant promotion on random instances") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const LaurentQ a = random_laurent(rng, 2);
    const LaurentQ b = random_laurent(rng, 2);
    const LaurentQ c = random_laurent(rng, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentQ::zero(2));
    CHECK(LaurentQ(1) * a == a);
    CHECK(a + LaurentQ(0) == a);
  }
  // Non-constant operands with mismatched variable counts are rejected.
  const LaurentQ two_vars = LaurentQ::var_pow(2, 0, 1);
  const LaurentQ three_vars = LaurentQ::var_pow(3, 0, 1);
  CHECK_THROWS_AS(two_vars + three_vars, ArgumentError);
}

TEST_CASE("bracket vanishes at one and kills any multiplicand there") {
  std::mt19937 rng(42);
  const LaurentQ zb = bracket(2, Rational(1), {0, 1});  // [z_1] = z_1 - 1/z_1
  CHECK(zb.term_count() == 2);
  CHECK(zb.degree_range(1) == std::pair{-1, 1});
  CHECK(zb.evaluate({Rational(3), Rational(1)}) == Rational(0));
  for (int trial = 0; trial < 15; ++trial) {
    const LaurentQ p = random_laurent(rng, 2);
    const LaurentQ product = zb * p;
    // Substitute z_1 := 1 (scale 1, zero exponent) and evaluate the rest.
    const LaurentQ at_one = product.substituted_var(1, Rational(1), {0, 0});
    CHECK(at_one.evaluate({Rational(5), Rational(1)}) == Rational(0));
  }
}

TEST_CASE("substitution, embedding, and evaluation are consistent") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentQ p = random_laurent(rng, 2);

    // z_0 := 2 z_1^3 performed symbolically, then evaluated, must agree with
    // direct evaluation at the composed point.
    const LaurentQ sub = p.substituted_var(0, Rational(2), {0, 3});
    const Rational z1(3, 2);
    const Rational composed = sub.evaluate({Rational(7), z1});  // z_0 slot unused
    const Rational direct = p.evaluate({2 * z1 * z1 * z1, z1});
    CHECK(composed == direct);

    // Renaming variables into a bigger space preserves evaluation.
    const LaurentQ embedded = p.embedded(4, {2, 0});
    const Rational a(5, 3), b(7, 4);
    CHECK(embedded.evaluate({b, Rational(9), a, Rational(11)}) == p.evaluate({a, b}));
  }
}

TEST_CASE("negative-exponent substitution inverts the variable") {
  const LaurentQ p = LaurentQ::var_pow(1, 0, 2) + LaurentQ::var_pow(1, 0, -1, Rational(4));
  const LaurentQ inverted = p.substituted_var(0, Rational(1), {-1});
  CHECK(inverted == LaurentQ::var_pow(1, 0, -2) + LaurentQ::var_pow(1, 0, 1, Rational(4)));
}

TEST_CASE("exact division recovers factors and rejects nonfactors") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    const LaurentQ a = random_laurent(rng, 2);
    LaurentQ b = random_laurent(rng, 2);
    if (b.is_zero()) b = LaurentQ(1);
    const auto q = LaurentQ::divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  const LaurentQ z = LaurentQ::var_pow(1, 0, 1);
  const LaurentQ zb = z - LaurentQ::var_pow(1, 0, -1);  // [z]
  CHECK(!LaurentQ::divide_exact(z + LaurentQ(1), zb).has_value());
  CHECK_THROWS_AS(LaurentQ::divide_exact(z, LaurentQ::zero(1)), ArgumentError);
}

TEST_CASE("specialising even powers of t to the cube root of unity") {
  // t^2 z + t^-4 maps to w z + w^-1 = w z + w^2.
  const LaurentQ p =
      LaurentQ::monomial(2, {2, 1}, Rational(1)) + LaurentQ::monomial(2, {-4, 0}, Rational(1));
  const LaurentC image = specialize_even_t_to_omega(p);
  CHECK(image.nvars() == 1);
  CHECK(image.coeff({1}) == Cyclotomic::omega());
  CHECK(image.coeff({0}) == Cyclotomic::omega_pow(-2));
  const LaurentQ odd = LaurentQ::monomial(2, {1, 0}, Rational(1));
  CHECK_THROWS_AS(specialize_even_t_to_omega(odd), DegeneracyError);
}
