#include "xxzlbf/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace xxz {

const Int& factorial(long n) {
  if (n < 0) throw ArgumentError("factorial: negative argument");
  // A deque keeps references to existing entries valid while the cache grows;
  // callers routinely hold several entries at once within one expression.
  static std::deque<Int> cache{Int(1)};
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  while (static_cast<long>(cache.size()) <= n) {
    cache.push_back(Int(cache.back() * Int(cache.size())));
  }
  return cache[static_cast<std::size_t>(n)];
}

Int binomial(long n, long k) {
  if (n < 0) throw ArgumentError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return Int(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Int vsasm_count(long size) {
  if (size < 1 || size % 2 == 0) throw ArgumentError("vsasm_count: size must be odd and >= 1");
  const long k = (size - 1) / 2;
  // Product of factorial ratios over a power of two; each partial quotient is
  // kept as an exact rational and integrality is asserted at the end.
  Rational acc(1);
  for (long i = 1; i <= k; ++i) {
    acc *= Rational(factorial(6 * i - 2) * factorial(2 * i - 1),
                    factorial(4 * i - 2) * factorial(4 * i - 1));
  }
  acc /= pow_int(Rational(2), k);
  if (denominator(acc) != 1)
    throw DegeneracyError("vsasm_count: product is not an integer");
  return numerator(acc);
}

Int cstcpp_count(long size) {
  if (size < 2 || size % 2 != 0) throw ArgumentError("cstcpp_count: size must be even and >= 2");
  const long k = size / 2;
  Rational acc(1);
  for (long i = 0; i < k; ++i) {
    acc *= Rational(Int(3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                    factorial(4 * i) * factorial(4 * i + 1));
  }
  if (denominator(acc) != 1)
    throw DegeneracyError("cstcpp_count: product is not an integer");
  return numerator(acc);
}

Int gamma_factor(int n) {
  if (n < 0) throw ArgumentError("gamma_factor: chain length must be nonnegative");
  return (n % 2 == 0) ? vsasm_count(n + 1) : cstcpp_count(n + 1);
}

long nu_exponent(int n) {
  if (n < 0) throw ArgumentError("nu_exponent: chain length must be nonnegative");
  const long half = n / 2;
  return (n % 2 == 0) ? half * (half - 1) : half * half;
}

Int odsasm_count(long size, long i) {
  if (size < 2 || size % 2 != 0) throw ArgumentError("odsasm_count: size must be even and >= 2");
  if (i < 1 || i > size) throw ArgumentError("odsasm_count: column out of range");
  if (i == 1) return Int(0);
  const long n2 = size;  // 2n
  Rational acc(0);
  for (long k = 1; k <= i - 1; ++k) {
    Rational term(factorial(n2 + k - 2) * factorial(2 * n2 - k - 1),
                  factorial(2 * n2 - 2) * factorial(k - 1) * factorial(n2 - k));
    if ((i + k - 1) % 2 != 0) term = -term;
    acc += term;
  }
  acc *= Rational(vsasm_count(n2 - 1));
  if (denominator(acc) != 1)
    throw DegeneracyError("odsasm_count: sum is not an integer");
  return numerator(acc);
}

IntPolynomial odsasm_polynomial(int n) {
  if (n < 0) throw ArgumentError("odsasm_polynomial: order must be nonnegative");
  std::vector<Int> coeffs;
  coeffs.reserve(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) coeffs.push_back(odsasm_count(2 * n + 2, i + 2));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace xxz
