#include "xxzlbf/scalar.hpp"

#include <cctype>

namespace xxz {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> ArgumentError {
    return ArgumentError("not a rational number: '" + text + "'");
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) throw bad();
    Int d(den);
    if (d == 0) throw ArgumentError("zero denominator in '" + text + "'");
    return Rational(Int(num), d);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string head = text.substr(0, dot);
    const std::string tail = text.substr(dot + 1);
    if (tail.empty() || !is_integer_token(head + tail)) throw bad();
    const bool neg = !head.empty() && head[0] == '-';
    Int scale = pow_int(Int(10), static_cast<long>(tail.size()));
    Int whole(head.empty() || head == "-" || head == "+" ? "0" : head);
    Int frac(tail);
    Int numerator = whole * scale + (neg ? -frac : frac);
    return Rational(numerator, scale);
  }
  if (!is_integer_token(text)) throw bad();
  return Rational(Int(text));
}

std::string format_real(const Real& value, int digits) {
  if (digits < 1) throw ArgumentError("format_real: digits must be positive");
  return value.str(digits);
}

}  // namespace xxz
