#pragma once

// Exact arithmetic in the field Q(w) where w is the primitive third root of
// unity, w^2 + w + 1 = 0.  Elements are stored as a + b*w with rational a, b.

#include "xxzlbf/scalar.hpp"

#include <iosfwd>
#include <string>

namespace xxz {

class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(Rational a) : a_(std::move(a)) {}           // NOLINT(google-explicit-constructor)
  Cyclotomic(int a) : a_(a) {}                           // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclotomic omega() { return {Rational(0), Rational(1)}; }
  // w^k for any integer k (w^3 = 1).
  static Cyclotomic omega_pow(long k);

  const Rational& rational_part() const { return a_; }
  const Rational& omega_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // Complex conjugate: w -> w^2 = -1 - w.
  Cyclotomic conj() const { return {a_ - b_, -b_}; }
  // Squared complex modulus; always a nonnegative rational.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Cyclotomic operator-() const { return {-a_, -b_}; }
  Cyclotomic& operator+=(const Cyclotomic& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w since w^2 = -1 - w.
  Cyclotomic& operator*=(const Cyclotomic& o) {
    Rational ac = a_ * o.a_, bd = b_ * o.b_;
    Rational ad_bc = a_ * o.b_ + b_ * o.a_;
    a_ = ac - bd;
    b_ = ad_bc - bd;
    return *this;
  }
  Cyclotomic inverse() const;
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic l, const Cyclotomic& r) { return l += r; }
  friend Cyclotomic operator-(Cyclotomic l, const Cyclotomic& r) { return l -= r; }
  friend Cyclotomic operator*(Cyclotomic l, const Cyclotomic& r) { return l *= r; }
  friend Cyclotomic operator/(Cyclotomic l, const Cyclotomic& r) { return l /= r; }
  friend bool operator==(const Cyclotomic& l, const Cyclotomic& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Cyclotomic& l, const Cyclotomic& r) { return !(l == r); }

  Complex to_complex() const;
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace xxz

namespace Eigen {
template <>
struct NumTraits<xxz::Cyclotomic> : GenericNumTraits<xxz::Cyclotomic> {
  using Real       = xxz::Cyclotomic;
  using NonInteger = xxz::Cyclotomic;
  using Nested     = xxz::Cyclotomic;
  using Literal    = int;
  enum {
    IsComplex             = 0,
    IsInteger             = 0,
    IsSigned              = 1,
    RequireInitialization = 1,
    ReadCost              = 8,
    AddCost               = 30,
    MulCost               = 60,
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
