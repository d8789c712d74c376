#pragma once

// Dense univariate polynomials with exact big-integer coefficients.

#include "xxzlbf/scalar.hpp"

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace xxz {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(Int constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeff_.push_back(std::move(constant));
  }
  IntPolynomial(int constant) : IntPolynomial(Int(constant)) {}  // NOLINT
  // coeffs[k] is the coefficient of x^k.
  explicit IntPolynomial(std::vector<Int> coeffs) : coeff_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<int> coeffs) {
    for (int c : coeffs) coeff_.emplace_back(c);
    trim();
  }

  static IntPolynomial x() { return IntPolynomial(std::vector<Int>{Int(0), Int(1)}); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeff_.size())) ? coeff_[k] : Int(0);
  }
  const std::vector<Int>& coeffs() const { return coeff_; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial l, const IntPolynomial& r) { return l += r; }
  friend IntPolynomial operator-(IntPolynomial l, const IntPolynomial& r) { return l -= r; }
  friend IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r);
  friend bool operator==(const IntPolynomial& l, const IntPolynomial& r) {
    return l.coeff_ == r.coeff_;
  }
  friend bool operator!=(const IntPolynomial& l, const IntPolynomial& r) { return !(l == r); }

  // Quotient if `den` divides *this exactly over Z[x]; std::nullopt otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& den) const;

  // Horner evaluation over any commutative ring scalar constructible from Int.
  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }
  std::vector<Int> coeff_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace xxz

namespace Eigen {
template <>
struct NumTraits<xxz::IntPolynomial> : GenericNumTraits<xxz::IntPolynomial> {
  using Real       = xxz::IntPolynomial;
  using NonInteger = xxz::IntPolynomial;
  using Nested     = xxz::IntPolynomial;
  using Literal    = int;
  enum {
    IsComplex             = 0,
    IsInteger             = 1,
    IsSigned              = 1,
    RequireInitialization = 1,
    ReadCost              = 8,
    AddCost               = 60,
    MulCost               = 120,
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
