#include "xxzlbf/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace xxz {

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), Int(0));
  for (std::size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), Int(0));
  for (std::size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Int> out(l.coeff_.size() + r.coeff_.size() - 1, Int(0));
  for (std::size_t i = 0; i < l.coeff_.size(); ++i) {
    if (l.coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeff_.size(); ++j) out[i + j] += l.coeff_[i] * r.coeff_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& den) const {
  if (den.is_zero()) throw ArgumentError("IntPolynomial: division by zero");
  if (is_zero()) return IntPolynomial{};
  if (degree() < den.degree()) return std::nullopt;
  std::vector<Int> rem = coeff_;
  std::vector<Int> quot(coeff_.size() - den.coeff_.size() + 1, Int(0));
  const Int& lead = den.coeff_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Int& top = rem[k + den.degree()];
    if (top == 0) continue;
    Int q, r;
    mp::divide_qr(top, lead, q, r);
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (int j = 0; j <= den.degree(); ++j) rem[k + j] -= q * den.coeff_[j];
  }
  for (const Int& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeff_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || k == 0) os << a.str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.to_string();
}

}  // namespace xxz
