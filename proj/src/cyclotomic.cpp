#include "xxzlbf/cyclotomic.hpp"

#include <ostream>
#include <sstream>

namespace xxz {

Cyclotomic Cyclotomic::omega_pow(long k) {
  long r = k % 3;
  if (r < 0) r += 3;
  switch (r) {
    case 0: return Cyclotomic(1);
    case 1: return omega();
    default: return {Rational(-1), Rational(-1)};  // w^2 = -1 - w
  }
}

Cyclotomic Cyclotomic::inverse() const {
  const Rational n = norm();
  if (n == 0) throw ArgumentError("Cyclotomic: division by zero");
  return {(a_ - b_) / n, -b_ / n};
}

Complex Cyclotomic::to_complex() const {
  static const Real half_sqrt3 = sqrt(Real(3)) / 2;
  const Real ra = to_real(a_), rb = to_real(b_);
  return {ra - rb / 2, rb * half_sqrt3};
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
  } else if (a_ == 0) {
    os << b_ << "*w";
  } else {
    os << a_ << " + " << b_ << "*w";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

}  // namespace xxz
