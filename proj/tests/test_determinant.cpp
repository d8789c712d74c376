#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xxzlbf/determinant.hpp"
#include "xxzlbf/laurent.hpp"

#include <random>

using namespace xxz;

namespace {

// Independent reference: recursive cofactor expansion along the first row.
template <class S>
S cofactor_det(const Mat<S>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  S acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Mat<S> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const S term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

int draw(std::mt19937& rng, int span, int offset) {
  return static_cast<int>(rng() % static_cast<unsigned>(span)) - offset;
}

}  // namespace

TEST_CASE("integer Bareiss determinant equals cofactor expansion") {
  std::mt19937 rng(11);
  for (int size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 12; ++trial) {
      Mat<Int> m(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = Int(draw(rng, 19, 9));
      CHECK(bareiss_det<Int>(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("rational eliminations equal cofactor expansion") {
  std::mt19937 rng(12);
  for (int size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 10; ++trial) {
      Mat<Rational> m(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
          m(i, j) = Rational(draw(rng, 19, 9), 1 + static_cast<int>(rng() % 5));
      const Rational expected = cofactor_det(m);
      CHECK(exact_det(m) == expected);
      CHECK(field_det<Rational>(m) == expected);

      Mat<Real> mf(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) mf(i, j) = to_real(m(i, j));
      CHECK(abs(float_det<Real>(mf) - to_real(expected)) < Real("1e-45"));
    }
  }
}

TEST_CASE("cyclotomic field determinant equals cofactor expansion") {
  std::mt19937 rng(13);
  for (int size = 1; size <= 4; ++size) {
    for (int trial = 0; trial < 8; ++trial) {
      Mat<Cyclotomic> m(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
          m(i, j) = Cyclotomic(Rational(draw(rng, 9, 4)), Rational(draw(rng, 9, 4)));
      CHECK(field_det<Cyclotomic>(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("polynomial Bareiss determinant equals cofactor expansion") {
  std::mt19937 rng(14);
  const auto random_poly = [&rng] {
    std::vector<Int> c;
    const int deg = static_cast<int>(rng() % 3);
    for (int k = 0; k <= deg; ++k) c.push_back(Int(draw(rng, 9, 4)));
    return IntPolynomial(std::move(c));
  };
  for (int size = 1; size <= 4; ++size) {
    for (int trial = 0; trial < 8; ++trial) {
      Mat<IntPolynomial> m(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = random_poly();
      CHECK(bareiss_det<IntPolynomial>(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("Laurent Bareiss determinant equals cofactor expansion") {
  std::mt19937 rng(15);
  const int nvars = 2;
  const auto random_laurent = [&rng, nvars] {
    LaurentQ p = LaurentQ::zero(nvars);
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) {
      LaurentQ::Exponents e{draw(rng, 5, 2), draw(rng, 5, 2)};
      p = p + LaurentQ::monomial(nvars, std::move(e), Rational(draw(rng, 9, 4)));
    }
    return p;
  };
  for (int size = 1; size <= 3; ++size) {
    for (int trial = 0; trial < 6; ++trial) {
      Mat<LaurentQ> m(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = random_laurent();
      CHECK(bareiss_det<LaurentQ>(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("singular matrices give a zero determinant") {
  Mat<Int> m(3, 3);
  m << Int(1), Int(2), Int(3), Int(4), Int(5), Int(6), Int(1), Int(2), Int(3);
  CHECK(bareiss_det<Int>(m) == Int(0));

  Mat<Rational> q = m.cast<Rational>();
  CHECK(exact_det(q) == Rational(0));
  CHECK(field_det<Rational>(q) == Rational(0));
}

TEST_CASE("empty and non-square inputs") {
  const Mat<Int> empty(0, 0);
  CHECK(bareiss_det<Int>(empty) == Int(1));
  const Mat<Int> rect = Mat<Int>::Constant(2, 3, Int(1));
  CHECK_THROWS_AS(bareiss_det<Int>(rect), ArgumentError);
}
