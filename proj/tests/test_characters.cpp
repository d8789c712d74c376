#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xxzlbf/characters.hpp"
#include "xxzlbf/combinatorics.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace xxz;

namespace {

Rational rand_point(std::mt19937& rng) {
  int num = 2 + static_cast<int>(rng() % 40);
  const int den = 1 + static_cast<int>(rng() % 7);
  if (num == den) ++num;  // keep the point away from the singular value 1
  return Rational(num, den);
}

}  // namespace

TEST_CASE("bialternant small cases") {
  CHECK(symplectic_char<Rational>({}) == Rational(1));
  CHECK(symplectic_char<Rational>({Rational(2)}) == Rational(1));
  CHECK(symplectic_char<Rational>({Rational(5, 3)}) == Rational(1));

  // chi_3 is the character of the vector representation: sum of z + 1/z.
  const std::vector<Rational> pts = {Rational(2), Rational(3, 2), Rational(5)};
  Rational expected(0);
  for (const Rational& z : pts) expected += z + 1 / z;
  CHECK(symplectic_char<Rational>(pts) == expected);
}

TEST_CASE("bialternant symmetry under permutations and inversions") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = rand_point(rng), b = a + 1, c = b + Rational(1, 3);
    const Rational reference = symplectic_char<Rational>({a, b, c});
    CHECK(symplectic_char<Rational>({b, a, c}) == reference);
    CHECK(symplectic_char<Rational>({c, b, a}) == reference);
    CHECK(symplectic_char<Rational>({1 / a, b, c}) == reference);
    CHECK(symplectic_char<Rational>({a, 1 / b, 1 / c}) == reference);
  }
}

TEST_CASE("bialternant rejects singular evaluation points") {
  CHECK_THROWS_AS(symplectic_char<Rational>({Rational(1)}), DegeneracyError);
  CHECK_THROWS_AS(symplectic_char<Rational>({Rational(2), Rational(2), Rational(3)}),
                  DegeneracyError);
  CHECK_THROWS_AS(symplectic_char<Rational>({Rational(2), Rational(1, 2)}),
                  DegeneracyError);
}

TEST_CASE("symbolic bialternant at generic monomial arguments") {
  using Pair = std::pair<Rational, LaurentQ::Exponents>;
  const auto var = [](int nvars, int i) {
    LaurentQ::Exponents e(nvars, 0);
    e[i] = 1;
    return Pair{Rational(1), e};
  };

  // chi_2 carries the empty highest weight, so its character is 1.
  CHECK(symplectic_char_laurent<Rational>(2, {var(2, 0), var(2, 1)}) ==
        LaurentQ::constant(2, Rational(1)));

  LaurentQ expected = LaurentQ::zero(3);
  for (int i = 0; i < 3; ++i)
    expected += LaurentQ::var_pow(3, i, 1) + LaurentQ::var_pow(3, i, -1);
  CHECK(symplectic_char_laurent<Rational>(3, {var(3, 0), var(3, 1), var(3, 2)}) == expected);
}

TEST_CASE("homogeneous values") {
  CHECK(char_homogeneous(0) == Int(1));
  CHECK(char_homogeneous(1) == Int(1));
  CHECK(char_homogeneous(2) == Int(1));
  CHECK(char_homogeneous(3) == Int(6));
  CHECK(char_homogeneous(4) == Int(27));
  CHECK(char_homogeneous(5) == Int(891));
  for (int n = 0; n <= 12; ++n)
    CHECK(char_homogeneous(n) ==
          pow_int(Int(3), nu_exponent(n)) * gamma_factor(n));
  CHECK_THROWS_AS(char_homogeneous(-1), ArgumentError);
}

TEST_CASE("float coalescence approaches the homogeneous value") {
  const Real target = to_real(char_homogeneous(4));
  const auto coalesced = [](const Real& delta) {
    std::vector<Real> pts;
    for (int k = 1; k <= 4; ++k) pts.push_back(Real(1) + Real(k) * delta);
    return symplectic_char<Real>(pts);
  };
  const Real err_coarse = abs(coalesced(Real("1e-5")) - target);
  const Real err_fine = abs(coalesced(Real("5e-6")) - target);
  CHECK(err_coarse < Real("1e-2"));
  CHECK(err_fine < err_coarse);
}

TEST_CASE("binomial matrix smallest blocks") {
  const IntPolynomial x{0, 1};
  const Mat<IntPolynomial> even = binomial_overlap_matrix<IntPolynomial>(1, 0, x);
  CHECK(even(0, 0) == IntPolynomial{1, 0, 1});  // x^2 + 1
  const Mat<IntPolynomial> mixed = binomial_overlap_matrix<IntPolynomial>(1, 1, x);
  CHECK(mixed(0, 0) == IntPolynomial{1, 1, 1});  // x^2 + x + 1
  CHECK_THROWS_AS(binomial_overlap_matrix<Rational>(2, 2, Rational(1)), ArgumentError);
}

TEST_CASE("specialised character values") {
  // chi_3 with one inhomogeneity: 3 (x^2 + 1) / (1 - x + x^2).
  for (const Rational& x : {Rational(7, 5), Rational(2)}) {
    CHECK(special_char(3, x) == 3 * (x * x + 1) / (1 - x + x * x));
    CHECK(normalized_char_exact(3, x) == (x * x + 1) / (2 * (1 - x + x * x)));
  }
  for (int n = 0; n <= 12; ++n) {
    CHECK(special_char(n, Rational(1)) == Rational(char_homogeneous(n)));
    CHECK(normalized_char_exact(n, Rational(1)) == Rational(1));
  }
  CHECK_THROWS_AS(special_char(-2, Rational(1)), ArgumentError);
}

TEST_CASE("specialised character form decomposes the exact value") {
  for (int n = 2; n <= 11; ++n) {
    const SpecialCharForm form = special_char_form(n);
    CHECK(form.three_power == nu_exponent(n));
    CHECK(form.cyclo_power == (n - 1) / 2);
    CHECK(form.matrix_size == (n - 1) / 2);
    CHECK(form.matrix_shift == (n % 2 == 0 ? 1 : 0));
    const Rational x(5, 3);
    const Rational cyclo = 1 - x + x * x;
    const Rational value = Rational(pow_int(Int(3), form.three_power)) *
                           form.det.eval<Rational>(x) /
                           pow_int(cyclo, form.cyclo_power);
    CHECK(value == special_char(n, x));
  }
}

TEST_CASE("floating specialisation tracks the exact one") {
  const Rational x(3, 7);
  for (int n = 1; n <= 14; ++n) {
    const Real exact = to_real(special_char(n, x));
    CHECK(abs(special_char_f<Real>(n, to_real(x)) - exact) < Real("1e-50") * (Real(1) + abs(exact)));
    const Real ratio = to_real(normalized_char_exact(n, x));
    CHECK(abs(normalized_char_x<Real>(n, to_real(x)) - ratio) < Real("1e-50"));
  }
}

TEST_CASE("Moebius maps between z and x") {
  CHECK(abs(z_from_x(Complex(1)) - Complex(1)) < Real("1e-55"));
  std::mt19937 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const Real x = Real(1 + static_cast<int>(rng() % 500)) / Real(100);
    const Complex z = z_from_x(Complex(x));
    CHECK(abs(abs(z) - Real(1)) < Real("1e-55"));
    CHECK(abs(x_from_z(z) - Complex(x)) < Real("1e-30"));
  }
}

TEST_CASE("normalised ratio stays finite and nonzero on the unit circle") {
  const Real pi = acos(Real(-1));
  const Complex z(cos(pi / 3), sin(pi / 3));
  for (int n = 1; n <= 50; ++n) {
    const Complex value = normalized_char_z(n, z);
    CHECK(abs(value) > Real("1e-30"));
    CHECK(abs(value) < Real("1e30"));
  }
  CHECK(abs(normalized_char_z(3, Complex(1)) - Complex(1)) < Real("1e-50"));
}
