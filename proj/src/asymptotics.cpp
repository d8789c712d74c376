#include "xxzlbf/asymptotics.hpp"

#include "xxzlbf/characters.hpp"
#include "xxzlbf/overlap.hpp"

#include <boost/math/special_functions/gamma.hpp>

namespace xxz {

namespace {

void require_r(const Real& r) {
  if (!(r > 0) || !(r < 2)) throw ArgumentError("asymptotics: r must lie in (0, 2)");
}

}  // namespace

Real x_from_r(const Real& r) {
  require_r(r);
  const Real pi = pi_real();
  return sin(pi * (r + 1) / 3) / sin(pi * r / 3);
}

Real r_from_x(const Real& x) {
  if (!(x > 0)) throw ArgumentError("r_from_x: x must be positive");
  if (x == 1) return Real(1);
  Real lo("1e-40"), hi = Real(2) - Real("1e-40");
  for (int it = 0; it < 220; ++it) {
    const Real mid = (lo + hi) / 2;
    if (x_from_r(mid) > x) {
      lo = mid;  // x(r) is decreasing, so the root lies above mid
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

Real k_constant() {
  const Real pi = pi_real();
  return 8 * sqrt(pi / 3) / (3 * boost::math::tgamma(Real(1) / 3));
}

SeriesCoeffs series_coeffs(const Real& r) {
  require_r(r);
  const Real pi = pi_real();
  const Real delta = r - 1;
  SeriesCoeffs c;
  c.r = r;
  c.x = x_from_r(r);
  c.theta = 2 * pi * (1 - r) / 3;
  const Real s = sin(pi * delta / 2);
  const Real s2 = s * s;
  const Real front = 2 * sqrt(pi / 3) / boost::math::tgamma(Real(1) / 3);
  if (abs(delta) < Real("1e-6")) {
    // sin(2 pi d / 3) / sin(pi d / 2) = (4/3)(1 - 7 pi^2 d^2 / 216 + O(d^4))
    c.d_value = front * (Real(4) / 3) * (1 - 7 * pi * pi * delta * delta / 216);
  } else {
    c.d_value = front * sin(2 * pi * delta / 3) / s;
  }
  c.e_even = 13 - 14 * s2;
  c.e_odd = 11 - 10 * s2;
  c.tau2_even = Real(5) / 36 * s2;
  c.tau2_odd = -Real(7) / 36 * s2;
  return c;
}

Real lbf_asymptotic(int n1, int n2, const Real& r) {
  if (n1 <= 0 || n2 <= 0) throw ArgumentError("lbf_asymptotic: block lengths must be positive");
  const bool odd1 = n1 % 2 != 0, odd2 = n2 % 2 != 0;
  if (odd1 && odd2) throw DegeneracyError("lbf_asymptotic: undefined when both blocks are odd");
  const SeriesCoeffs c = series_coeffs(r);
  const int n = n1 + n2;
  const Real nn(n);
  const Real xi = Real(n1) / nn;
  const Real base = log(nn) / 6 - log(c.d_value);
  if (!odd1 && !odd2) {
    return base + log(xi * (1 - xi)) / 6 +
           c.e_even / 72 * (1 / xi + 1 / (1 - xi) - 1) / nn;
  }
  if (!odd1) {
    return base + log(xi / (1 - xi)) / 6 +
           (c.e_even / xi + c.e_odd * (1 - 1 / (1 - xi))) / 72 / nn;
  }
  const Real eta = 1 - xi;  // odd-even follows from even-odd with xi -> 1 - xi
  return base + log(eta / (1 - eta)) / 6 +
         (c.e_even / eta + c.e_odd * (1 - 1 / (1 - eta))) / 72 / nn;
}

Real gp_prefactor(const Real& theta, int sites) {
  if (sites < 0) throw ArgumentError("gp_prefactor: negative size");
  if (theta == 0) return Real(1);
  const Real half = theta / 2;
  const Real three_quarter = 3 * theta / 4;
  const Real lead = 3 * sin(half) / (2 * sin(three_quarter) * cos(half));
  const Real ratio = Real(4) / 9 * sin(three_quarter) * sin(three_quarter) /
                     (sin(half) * sin(half));
  return lead * pow_int(ratio, sites);
}

Complex gp_prefactor_z(const Complex& z, int sites) {
  if (sites < 0) throw ArgumentError("gp_prefactor_z: negative size");
  const Complex log_z = log(z);
  const Complex z12 = exp(log_z / 2);
  const Complex z32 = exp(3 * log_z / 2);
  const Complex z34 = exp(3 * log_z / 4);
  const Complex lead = 3 * z34 * (z - Complex(1)) / ((z32 - Complex(1)) * (z + Complex(1)));
  const Complex ratio = Complex(Real(4) / 9) * (z32 - Complex(1)) * (z32 - Complex(1)) /
                        (z12 * (z - Complex(1)) * (z - Complex(1)));
  return lead * pow_int(ratio, sites);
}

TauFit fit_tau(bool odd_sites, const Real& r, int n_min, int n_max) {
  if (n_min < 2 || n_max <= n_min) throw ArgumentError("fit_tau: bad size range");
  const SeriesCoeffs c = series_coeffs(r);
  Mat<Real> ata = Mat<Real>::Zero(3, 3);
  Vec<Real> aty = Vec<Real>::Zero(3);
  int count = 0;
  for (int n = n_min + ((n_min % 2 == 0) == odd_sites ? 1 : 0); n <= n_max; n += 2) {
    const Real xn = normalized_char_x<Real>(n, c.x);
    const Real pn = gp_prefactor(c.theta, n);
    const Real rn = (xn / pn - 1) * n;
    const Real root = sqrt(Real(n));
    const std::array<Real, 3> basis = {root, Real(1), 1 / root};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) ata(i, j) += basis[i] * basis[j];
      aty(i) += basis[i] * rn;
    }
    ++count;
  }
  if (count < 4) throw ArgumentError("fit_tau: not enough sizes in range");
  const Vec<Real> coeff = ata.fullPivLu().solve(aty);
  return {coeff(0), coeff(1)};
}

Real ode_residual(int n, bool odd_sites, const Complex& z, const Real& h) {
  if (n < (odd_sites ? 0 : 1)) throw ArgumentError("ode_residual: size index too small");
  if (!(h > 0)) throw ArgumentError("ode_residual: step must be positive");
  const int m = odd_sites ? 2 * n + 1 : 2 * n;
  const auto f = [m](const Complex& w) {
    return pow_int(w, -m) * pow_int(w - Complex(1), 2 * m - 1) * (w + Complex(1)) *
           normalized_char_x<Complex>(m, x_from_z(w));
  };
  const Complex fm = f(z - Complex(h));
  const Complex f0 = f(z);
  const Complex fp = f(z + Complex(h));
  const Complex d1 = (fp - fm) / Complex(2 * h);
  const Complex d2 = (fp - Complex(2) * f0 + fm) / Complex(h * h);
  const Real c1 = odd_sites ? Real(6 * n) : Real(3 * (2 * n - 1));
  const Real c0 = odd_sites ? Real((3 * n + 1) * (3 * n - 1)) : Real((3 * n - 1) * (3 * n - 2));
  const Complex z3 = pow_int(z, 3);
  const Complex term1 = z * z * d2 + z * d1;
  const Complex term2 = Complex(c1) * (Complex(1) + z3) / (Complex(1) - z3) * z * d1;
  const Complex term3 = Complex(c0) * f0;
  using std::abs;
  Real scale = abs(term1);
  scale = scale > abs(term2) ? scale : abs(term2);
  scale = scale > abs(term3) ? scale : abs(term3);
  if (scale == 0) throw NumericalError("ode_residual: all terms vanish");
  return abs(term1 + term2 + term3) / scale;
}

namespace {
Real base_charge() { return 1 / (2 * sqrt(Real(3))); }
}  // namespace

std::array<Real, 4> charges_even_even() {
  const Real a = base_charge();
  return {a, -a, a, -a};
}

std::array<Real, 4> charges_even_odd() {
  const Real a = base_charge();
  return {a, -a, -a, a};
}

Real cft_f(const Real& xi, const std::array<Real, 4>& alpha) {
  if (!(xi > 0) || !(xi < 1)) throw ArgumentError("cft_f: xi must lie in (0, 1)");
  const Real& a1 = alpha[0];
  const Real& a2 = alpha[1];
  const Real& a3 = alpha[2];
  const Real& a4 = alpha[3];
  const Real coeff1 = (2 * xi - 1 + 2 / xi) / 24 + (1 - 1 / xi) * a1 * a1 - a2 * a2 / 2 -
                      2 * a2 * a3 - a3 * a3 + (1 - xi) * a4 * a4;
  const Real coeff2 = (1 - 2 * xi + 2 / (1 - xi)) / 24 + (1 - 1 / (1 - xi)) * a3 * a3 -
                      a2 * a2 / 2 - 2 * a2 * a1 - a1 * a1 + xi * a4 * a4;
  return coeff1 * log(1 - xi) + coeff2 * log(xi);
}

Real cft_g(const Real& xi, const std::array<Real, 4>& alpha) {
  if (!(xi > 0) || !(xi < 1)) throw ArgumentError("cft_g: xi must lie in (0, 1)");
  const Real twelfth = Real(1) / 12;
  return (alpha[3] * alpha[3] - twelfth + (twelfth - alpha[0] * alpha[0]) / xi +
          (twelfth - alpha[2] * alpha[2]) / (1 - xi)) /
         2;
}

Rational energy_bulk() { return Rational(-3, 4); }

Rational energy_boundary(const Rational& x) {
  if (!(x > 0)) throw ArgumentError("energy_boundary: x must be positive");
  return (Rational(2) - x) * (Rational(2) - Rational(1) / x) / 4;
}

std::vector<CompareRow> compare_sweep(int sites, const Rational& x) {
  if (sites < 4) throw ArgumentError("compare_sweep: need at least four sites");
  const Real r = r_from_x(to_real(x));
  std::vector<CompareRow> rows;
  for (int n1 = 2; sites - n1 >= 1; n1 += 2) {
    const int n2 = sites - n1;
    if (n2 % 2 != 0 && n1 % 2 != 0) continue;
    CompareRow row;
    row.n1 = n1;
    row.n2 = n2;
    row.xi = Real(n1) / Real(sites);
    row.exact = log_fidelity(n1, n2, x);
    row.series = lbf_asymptotic(n1, n2, r);
    row.difference = row.exact - row.series;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace xxz
