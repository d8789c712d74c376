// Checks of the symplectic character: the homogeneous value against the
// enumeration product, symbolic width/reversal invariance, the leading
// coefficient, the reduction relation at random points, and the expansion of
// the mixed-parity determinant in alternating-sign-matrix counts.

#include "xxzlbf/characters.hpp"
#include "xxzlbf/combinatorics.hpp"
#include "xxzlbf/determinant.hpp"
#include "xxzlbf/laurent.hpp"
#include "xxzlbf/verify.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace xxz {

namespace {

Real rel_diff(const Complex& a, const Complex& b) {
  return abs(a - b) / (abs(a) + abs(b) + 1);
}

}  // namespace

std::vector<CheckResult> verify_characters(int max_homogeneous, int max_reduction,
                                           int max_counting, unsigned seed) {
  std::vector<CheckResult> out;

  {
    // chi_N(1,...,1) via the binomial determinant at x = 1 equals the
    // enumeration product 3^{nu_N} gamma_N.
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= max_homogeneous && ok; ++n) {
      ok = special_char(n, Rational(1)) == Rational(char_homogeneous(n));
      if (!ok) detail = "failed at N=" + std::to_string(n);
    }
    out.push_back(CheckResult{"characters/homogeneous-value", ok, detail});
  }

  {
    // In its last argument, chi_N is a centred Laurent polynomial of width
    // 2(ceil(N/2) - 1), invariant under z -> 1/z.
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
      std::vector<std::pair<Rational, LaurentQ::Exponents>> args;
      for (int i = 1; i < n; ++i)
        args.emplace_back(Rational(i + 1), LaurentQ::Exponents{0});
      args.emplace_back(Rational(1), LaurentQ::Exponents{1});
      const LaurentQ chi = symplectic_char_laurent<Rational>(1, args);
      const auto [lo, hi] = chi.degree_range(0);
      const int nbar = (n + 1) / 2;
      ok = lo == -hi && hi == nbar - 1 &&
           chi.substituted_var(0, Rational(1), LaurentQ::Exponents{-1}) == chi;
    }
    out.push_back(CheckResult{"characters/width-and-reversal", ok});
  }

  {
    // lim_{z -> infinity} z^{-(ceil(N/2)-1)} chi_N(..., z) = chi_{N-1}(...),
    // probed at |z| = 1e6.
    bool ok = true;
    std::string detail;
    std::mt19937 rng(seed);
    const Real big("1e6");
    for (int n = 2; n <= max_reduction && ok; ++n) {
      std::vector<Rational> radii;
      while (static_cast<int>(radii.size()) < n - 1) {
        const Rational r(105 + static_cast<int>(rng() % 200), 100);
        bool fresh = true;
        for (const Rational& s : radii) fresh = fresh && s != r;
        if (fresh) radii.push_back(r);
      }
      std::vector<Complex> pts;
      for (const Rational& r : radii) pts.emplace_back(to_real(r));
      const Complex small = symplectic_char<Complex>(pts);
      pts.emplace_back(big);
      const Complex large = symplectic_char<Complex>(pts);
      const int nbar = (n + 1) / 2;
      const Complex scaled = large / pow_int(Complex(big), nbar - 1);
      const Real rd = rel_diff(scaled, small);
      ok = rd < Real("1e-5");
      if (!ok) detail = "relative difference " + format_real(rd, 6) + " at N=" + std::to_string(n);
    }
    out.push_back(CheckResult{"characters/leading-coefficient", ok, detail});
  }

  {
    // Reduction relation at z_j = w z_i with w = e^{2 pi i/3}:
    //   chi_N(...) = prod_{k != i,j} z_k^{-1}(z_k - w^2 z_i)(z_k - w/z_i)
    //                chi_{N-2}(remaining),
    // at 50 random points with distinct moduli above one.
    std::mt19937 rng(seed + 1);
    const Complex w_root(Real(-1) / 2, sqrt(Real(3)) / 2);
    bool ok = true;
    std::string detail;
    Real worst(0);
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_reduction - 1));
      std::vector<Rational> radii;
      while (static_cast<int>(radii.size()) < n) {
        const Rational r(105 + static_cast<int>(rng() % 400), 100);
        bool fresh = true;
        for (const Rational& s : radii) fresh = fresh && s != r;
        if (fresh) radii.push_back(r);
      }
      int i = static_cast<int>(rng() % static_cast<unsigned>(n));
      int j = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (i == j) j = (j + 1) % n;
      std::vector<Complex> pts(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) pts[static_cast<std::size_t>(k)] = Complex(to_real(radii[static_cast<std::size_t>(k)]));
      const Complex zi = pts[static_cast<std::size_t>(i)];
      pts[static_cast<std::size_t>(j)] = w_root * zi;
      const Complex lhs = symplectic_char<Complex>(pts);
      Complex pref(Real(1));
      std::vector<Complex> rest;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Complex& zk = pts[static_cast<std::size_t>(k)];
        pref *= (zk - w_root * w_root * zi) * (zk - w_root / zi) / zk;
        rest.push_back(zk);
      }
      const Complex rhs = pref * symplectic_char<Complex>(rest);
      const Real rd = rel_diff(lhs, rhs);
      if (rd > worst) worst = rd;
      ok = rd < Real("1e-10");
      if (!ok) detail = "relative residual " + format_real(rd, 6) + " at N=" + std::to_string(n);
    }
    if (ok) detail = "worst residual " + format_real(worst, 3);
    out.push_back(CheckResult{"characters/reduction-relation", ok, detail});
  }

  {
    // The order-n mixed-parity determinant expands with coefficients counting
    // off-diagonally symmetric alternating sign matrices by the position of
    // the first-row 1.
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= max_counting && ok; ++n) {
      const IntPolynomial det =
          bareiss_det<IntPolynomial>(binomial_overlap_matrix<IntPolynomial>(n, 1, IntPolynomial::x()));
      ok = det == odsasm_polynomial(n);
      if (!ok) detail = "failed at order " + std::to_string(n);
    }
    out.push_back(CheckResult{"characters/mixed-determinant-counting", ok, detail});
  }

  return out;
}

}  // namespace xxz
