#pragma once

// Large-N asymptotics of the logarithmic bipartite fidelity and the
// conformal-field-theory comparison: the trigonometric parametrisation
// x(r) = sin(pi(r+1)/3)/sin(pi r/3), the series coefficients D, E, Ebar and
// the character subleading coefficients tau_2 / taubar_2, the truncated
// asymptotic series for F_{N1,N2}, the Gorin-Panova prefactor, numerical
// fits of the character corrections, the differential-equation residual for
// the normalised character, and the free-boson prediction with its U(1)
// charges.

#include "xxzlbf/scalar.hpp"

#include <array>
#include <vector>

namespace xxz {

// x(r) for 0 < r < 2; decreasing bijection onto x > 0 with x(1) = 1.
Real x_from_r(const Real& r);

// Inverse map by bisection.
Real r_from_x(const Real& x);

struct SeriesCoeffs {
  Real r;
  Real x;
  Real theta;      // 2 pi (1 - r) / 3, the argument of z = e^{i theta}
  Real d_value;    // D, with its analytic r -> 1 limit K
  Real e_even;     // E
  Real e_odd;      // Ebar
  Real tau2_even;  // tau_2(z)
  Real tau2_odd;   // taubar_2(z)
};
SeriesCoeffs series_coeffs(const Real& r);

// K = D(r -> 1) = 8 sqrt(pi/3) / (3 Gamma(1/3)).
Real k_constant();

// Truncated asymptotic series for F_{N1,N2} (terms through 1/N); requires at
// least one even block.
Real lbf_asymptotic(int n1, int n2, const Real& r);

// Leading Gorin-Panova factor of frakX_N(e^{i theta}) in trigonometric form:
//   3 sin(theta/2) / (2 sin(3 theta/4) cos(theta/2))
//     * ((4/9) sin^2(3 theta/4) / sin^2(theta/2))^N.
Real gp_prefactor(const Real& theta, int sites);

// The same factor evaluated from the algebraic form with principal powers,
// for cross-checking away from the unit circle.
Complex gp_prefactor_z(const Complex& z, int sites);

// Least-squares fit of R_N = (frakX_N / prefactor - 1) N against
// {sqrt(N), 1, 1/sqrt(N)} over one parity class N = n_min..n_max; the
// coefficient of sqrt(N) estimates tau_1 (expected zero) and the constant
// estimates tau_2.
struct TauFit {
  Real tau1;
  Real tau2;
};
TauFit fit_tau(bool odd_sites, const Real& r, int n_min, int n_max);

// Relative residual of the differential equation satisfied by
// f_M(z) = z^{-M} (z-1)^{2M-1} (z+1) frakX_M(z), with M = 2n or 2n+1:
//   z (z f')' + c1 (1+z^3)/(1-z^3) z f' + c0 f = 0,
// via central differences with step h.
Real ode_residual(int n, bool odd_sites, const Complex& z, const Real& h);

// Free-boson U(1) charges (alpha_1..alpha_4) for the two parity classes.
std::array<Real, 4> charges_even_even();
std::array<Real, 4> charges_even_odd();

// CFT profile f(xi) for central charge 1 with the given charges (additive
// constant omitted) and the 1/N ln N coefficient g(xi) (extrapolation
// length set to one).
Real cft_f(const Real& xi, const std::array<Real, 4>& alpha);
Real cft_g(const Real& xi, const std::array<Real, 4>& alpha);

// Exact ground-state energy decomposition E_0 = N E_bulk + E_bndr.
Rational energy_bulk();
Rational energy_boundary(const Rational& x);

// Exact-versus-asymptotic comparison across one system size (the data behind
// the finite-size/series comparison plots): all splittings with even N1.
struct CompareRow {
  int n1;
  int n2;
  Real xi;
  Real exact;
  Real series;
  Real difference;
};
std::vector<CompareRow> compare_sweep(int sites, const Rational& x);

}  // namespace xxz
