#include "xxzlbf/characters.hpp"

namespace xxz {

Int char_homogeneous(int n) {
  if (n < 0) throw ArgumentError("char_homogeneous: N must be nonnegative");
  return pow_int(Int(3), nu_exponent(n)) * gamma_factor(n);
}

SpecialCharForm special_char_form(int n) {
  if (n < 0) throw ArgumentError("special_char_form: N must be nonnegative");
  SpecialCharForm form;
  form.three_power = nu_exponent(n);
  form.cyclo_power = n <= 1 ? 0 : (n - 1) / 2;
  form.matrix_size = static_cast<int>(form.cyclo_power);
  form.matrix_shift = n % 2 == 0 ? 1 : 0;
  form.det = bareiss_det<IntPolynomial>(
      binomial_overlap_matrix<IntPolynomial>(form.matrix_size, form.matrix_shift, IntPolynomial::x()));
  return form;
}

Rational special_char(int n, const Rational& x) {
  if (n < 0) throw ArgumentError("special_char: N must be nonnegative");
  if (n <= 1) return 1;
  const int k     = (n - 1) / 2;
  const int shift = n % 2 == 0 ? 1 : 0;
  const Rational det = exact_det(binomial_overlap_matrix<Rational>(k, shift, x));
  const Rational cyclo = Rational(1) - x + x * x;
  return Rational(pow_int(Int(3), nu_exponent(n))) * det / pow_int(cyclo, k);
}

Rational normalized_char_exact(int n, const Rational& x) {
  return special_char(n, x) / Rational(char_homogeneous(n));
}

namespace {
const Complex& omega_numeric() {
  static const Complex q(Real(-1) / 2, sqrt(Real(3)) / 2);
  return q;
}
}  // namespace

Complex z_from_x(const Complex& x) {
  const Complex& q = omega_numeric();
  return (q * x + Complex(1)) / (q + x);
}

Complex x_from_z(const Complex& z) {
  const Complex& q = omega_numeric();
  return (Complex(1) - q * z) / (z - q);
}

Complex normalized_char_z(int n, const Complex& z) {
  return normalized_char_x<Complex>(n, x_from_z(z));
}

}  // namespace xxz
