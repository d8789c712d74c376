#pragma once

// Scalar substrate for the whole library: exact big integers and rationals
// (GMP-backed), fixed 60-digit binary floats and complex numbers, plus the
// Eigen dense/sparse aliases used throughout.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace xxz {

namespace mp = boost::multiprecision;

using Int      = mp::mpz_int;
using Rational = mp::mpq_rational;

// Working precision of all floating-point evaluations (decimal digits).
inline constexpr int kRealDigits = 60;

using Real    = mp::number<mp::cpp_bin_float<kRealDigits>>;
using Complex = mp::cpp_complex<kRealDigits>;

template <class S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Error taxonomy.  ArgumentError maps to CLI exit code 2; DegeneracyError and
// NumericalError map to exit code 3.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Real to_real(const Rational& r) { return Real(r); }
inline Real to_real(const Int& n) { return Real(n); }

inline Real pi_real() {
  static const Real pi = acos(Real(-1));
  return pi;
}

// Integer power with exact scalars; e may be negative for field scalars.
template <class S>
S pow_int(const S& base, long e) {
  if (e == 0) return S(1);
  if (e < 0) return S(1) / pow_int(base, -e);
  S acc(1), b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) acc *= b;
    b *= b;
    k >>= 1UL;
  }
  return acc;
}

// Parses "p/q", a plain integer, or a decimal string such as "1.4" (exactly,
// as 14/10).  Throws ArgumentError on malformed input.
Rational parse_rational(const std::string& text);

// Decimal string with round-to-nearest at `digits` significant digits.
std::string format_real(const Real& value, int digits);

}  // namespace xxz
