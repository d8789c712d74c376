#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xxzlbf/polynomial.hpp"

#include <random>

using namespace xxz;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::vector<Int> c;
  const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  for (int k = 0; k <= deg; ++k) c.push_back(Int(static_cast<int>(rng() % 11) - 5));
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction, degree, and coefficient access") {
  const IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.coeff(0) == Int(0));

  const IntPolynomial p{1, 0, 2};  // 2x^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Int(1));
  CHECK(p.coeff(1) == Int(0));
  CHECK(p.coeff(2) == Int(2));
  CHECK(p.coeff(5) == Int(0));
  CHECK(p.coeff(-1) == Int(0));

  // Leading zeros are trimmed: x + 0*x^2 has degree 1.
  CHECK(IntPolynomial(std::vector<Int>{Int(0), Int(1), Int(0)}).degree() == 1);
  CHECK(IntPolynomial(0).is_zero());
}

TEST_CASE("ring axioms on random instances") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPolynomial a = random_poly(rng, 4);
    const IntPolynomial b = random_poly(rng, 4);
    const IntPolynomial c = random_poly(rng, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPolynomial(0));
    CHECK(a + (-a) == IntPolynomial(0));
  }
}

TEST_CASE("Horner evaluation agrees with direct power sums") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const IntPolynomial p = random_poly(rng, 5);
    const Rational x(static_cast<int>(rng() % 15) - 7, 1 + static_cast<int>(rng() % 4));
    Rational direct(0);
    Rational power(1);
    for (int k = 0; k <= p.degree(); ++k) {
      direct += Rational(p.coeff(k)) * power;
      power *= x;
    }
    CHECK(p.eval(x) == direct);
  }
  CHECK(IntPolynomial::x().eval(Rational(7, 2)) == Rational(7, 2));
}

TEST_CASE("exact division recovers factors and rejects nonfactors") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const IntPolynomial a = random_poly(rng, 4);
    IntPolynomial b = random_poly(rng, 3);
    if (b.is_zero()) b = IntPolynomial(1);
    const auto quotient = (a * b).divide_exact(b);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == a);
  }
  const IntPolynomial p{1, 1};       // x + 1
  const IntPolynomial q{1, 0, 1};    // x^2 + 1
  CHECK(!q.divide_exact(p).has_value());
  // 2x + 2 is not divisible by 4 over the integers.
  CHECK(!IntPolynomial{2, 2}.divide_exact(IntPolynomial(4)).has_value());
  CHECK(IntPolynomial{2, 2}.divide_exact(IntPolynomial(2)).has_value());
}

TEST_CASE("printing gives a readable normal form") {
  CHECK(IntPolynomial(0).to_string() != "");
  const std::string s = IntPolynomial{1, 0, 2}.to_string();
  CHECK(s.find("x^2") != std::string::npos);
  CHECK(s.find('1') != std::string::npos);
}
