#pragma once

// Symplectic characters chi_N: the bialternant evaluation at arbitrary
// points, the one-inhomogeneity specialisation chi_N(1,...,1,(beta/q)^2)
// expressed through x = -[beta q]/[beta] as binomial determinants, the
// homogeneous value chi_N(1,...,1) = 3^{nu_N} gamma_N, and the normalised
// ratio frakX_N(z) = chi_N(1,...,1,z)/chi_N(1,...,1) used by the asymptotic
// analysis.  The Moebius maps between z and x use the primitive third root
// of unity q.

#include "xxzlbf/combinatorics.hpp"
#include "xxzlbf/cyclotomic.hpp"
#include "xxzlbf/determinant.hpp"
#include "xxzlbf/laurent.hpp"
#include "xxzlbf/polynomial.hpp"
#include "xxzlbf/scalar.hpp"

#include <type_traits>
#include <utility>
#include <vector>

namespace xxz {

namespace detail {
template <class S>
S scalar_from_int(const Int& n) {
  if constexpr (std::is_same_v<S, Complex>) {
    return Complex(to_real(n));
  } else if constexpr (std::is_same_v<S, Real>) {
    return to_real(n);
  } else {
    return S(n);
  }
}
}  // namespace detail

// Matrix behind both the specialised character values and the overlap
// determinants.  With s = shift in {0, 1} the 1-based entries are
//   (x-1)^2 C(i+j-2+s, 2j-i-1+s) + x C(i+j+s, 2j-i+s).
// shift = 0 is the even-overlap / odd-character form, shift = 1 the
// mixed-overlap / even-character form.
template <class S>
Mat<S> binomial_overlap_matrix(int size, int shift, const S& x) {
  if (size < 0 || shift < 0 || shift > 1)
    throw ArgumentError("binomial_overlap_matrix: bad size or shift");
  Mat<S> a(size, size);
  const S square = (x - S(1)) * (x - S(1));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const S b1 = detail::scalar_from_int<S>(binomial(i + j - 2 + shift, 2 * j - i - 1 + shift));
      const S b2 = detail::scalar_from_int<S>(binomial(i + j + shift, 2 * j - i + shift));
      a(i - 1, j - 1) = square * b1 + x * b2;
    }
  }
  return a;
}

// chi_N evaluated at the given N points (N = points.size()); exact for
// Rational/Cyclotomic scalars, LU-based for Real/Complex.  Throws
// DegeneracyError when the Weyl denominator vanishes (coincident points,
// reciprocal pairs, or points at +-1).
template <class S>
S symplectic_char(const std::vector<S>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return S(1);
  Mat<S> num(n, n), den(n, n);
  for (int i = 1; i <= n; ++i) {
    const long lambda = (n - i) / 2;
    const long delta  = n - i + 1;
    const long mu     = lambda + delta;
    for (int j = 0; j < n; ++j) {
      num(i - 1, j) = pow_int(points[j], mu) - pow_int(points[j], -mu);
      den(i - 1, j) = pow_int(points[j], delta) - pow_int(points[j], -delta);
    }
  }
  constexpr bool exact = std::is_same_v<S, Rational> || std::is_same_v<S, Cyclotomic>;
  S d;
  if constexpr (exact) {
    d = field_det<S>(std::move(den));
  } else {
    d = float_det<S>(std::move(den));
  }
  if (d == S(0)) throw DegeneracyError("symplectic_char: singular evaluation point");
  if constexpr (exact) {
    return field_det<S>(std::move(num)) / d;
  } else {
    return float_det<S>(std::move(num)) / d;
  }
}

// Symbolic bialternant: chi_N at scaled-monomial arguments inside a Laurent
// ring; the denominator division is performed exactly and certified.
template <class Coeff>
Laurent<Coeff> symplectic_char_laurent(
    int nvars,
    const std::vector<std::pair<Coeff, typename Laurent<Coeff>::Exponents>>& args) {
  using L = Laurent<Coeff>;
  const int n = static_cast<int>(args.size());
  if (n == 0) return L::constant(nvars, Coeff(1));
  const auto arg_pow = [&](int j, long e) {
    typename L::Exponents expt(nvars, 0);
    for (int v = 0; v < nvars; ++v)
      expt[v] = static_cast<int>(e) * args[static_cast<std::size_t>(j)].second[v];
    const Coeff base = args[static_cast<std::size_t>(j)].first;
    Coeff c = e >= 0 ? pow_int(base, e) : Coeff(1) / pow_int(base, -e);
    return L::monomial(nvars, std::move(expt), c);
  };
  Mat<L> num(n, n), den(n, n);
  for (int i = 1; i <= n; ++i) {
    const long lambda = (n - i) / 2;
    const long delta  = n - i + 1;
    const long mu     = lambda + delta;
    for (int j = 0; j < n; ++j) {
      num(i - 1, j) = arg_pow(j, mu) - arg_pow(j, -mu);
      den(i - 1, j) = arg_pow(j, delta) - arg_pow(j, -delta);
    }
  }
  const L num_det = bareiss_det<L>(std::move(num));
  const L den_det = bareiss_det<L>(std::move(den));
  if (den_det.is_zero())
    throw DegeneracyError("symplectic_char_laurent: singular argument list");
  auto quotient = L::divide_exact(num_det, den_det);
  if (!quotient)
    throw DegeneracyError("symplectic_char_laurent: bialternant division is not exact");
  return *quotient;
}

// chi_N(1, ..., 1) = 3^{nu_N} gamma_N.
Int char_homogeneous(int n);

// Decomposition chi_N(1,...,1,(beta/q)^2) = 3^{nu_N} det(P(x)) / (1-x+x^2)^k
// with P the binomial matrix above and k = floor((N-1)/2).
struct SpecialCharForm {
  long three_power = 0;   // nu_N
  long cyclo_power = 0;   // k
  int matrix_size  = 0;
  int matrix_shift = 0;
  IntPolynomial det;      // det P(x), expanded symbolically
};
SpecialCharForm special_char_form(int n);

// Exact value of chi_N(1,...,1,(beta/q)^2) at rational x > 0.
Rational special_char(int n, const Rational& x);

// Floating evaluation of the same quantity (S = Real or Complex).
template <class S>
S special_char_f(int n, const S& x) {
  if (n < 0) throw ArgumentError("special_char_f: N must be nonnegative");
  if (n <= 1) return S(1);
  const int k     = (n - 1) / 2;
  const int shift = n % 2 == 0 ? 1 : 0;
  const S det     = float_det<S>(binomial_overlap_matrix<S>(k, shift, x));
  const S cyclo   = S(1) - x + x * x;
  return detail::scalar_from_int<S>(pow_int(Int(3), nu_exponent(n))) * det / pow_int(cyclo, k);
}

// Exact normalised ratio frakX_N at rational x.
Rational normalized_char_exact(int n, const Rational& x);

// Floating normalised ratio frakX_N through the x surrogate.
template <class S>
S normalized_char_x(int n, const S& x) {
  return special_char_f<S>(n, x) / detail::scalar_from_int<S>(char_homogeneous(n));
}

// Moebius maps z <-> x with q = exp(2 pi i / 3):
//   z = (q x + 1)/(q + x),   x = (1 - q z)/(z - q).
Complex z_from_x(const Complex& x);
Complex x_from_z(const Complex& z);

// frakX_N(z) for complex z (away from z = q).
Complex normalized_char_z(int n, const Complex& z);

}  // namespace xxz
