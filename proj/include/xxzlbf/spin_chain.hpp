#pragma once

// Open XXZ chain at Delta = -1/2 with diagonal boundary fields parameterised
// by x > 0:
//   H = -1/2 sum_i (sx_i sx_{i+1} + sy_i sy_{i+1} + Delta sz_i sz_{i+1})
//       + p sz_1 + pbar sz_N,   p = (1 - 2x)/4,  pbar = (1 - 2/x)/4,
// restricted to its ground-state magnetisation sector (0 for even N, +1/2 for
// odd N).  For N = 1 the Hamiltonian degenerates to (p + pbar) sz.  The
// ground state is obtained as the exact kernel of H - E0 with
//   E0 = -(3N - 1)/4 - (1 - x)^2 / (2x),
// normalised so that the component on the word with all downs first is 1.

#include "xxzlbf/scalar.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace xxz {

// Spin words are bit masks over `sites` bits with site 1 at the most
// significant position; bit value 1 means spin down.  Ascending numeric order
// of words is lexicographic order with up < down.
struct SectorBasis {
  int sites  = 0;
  int downs  = 0;
  std::vector<std::uint32_t> words;

  // Sector containing the ground state: floor(sites/2) down spins.
  static SectorBasis ground_sector(int sites);

  int dimension() const { return static_cast<int>(words.size()); }
  // Index of a word in the basis; -1 when absent.
  int index_of(std::uint32_t word) const;
};

struct SectorHamiltonian {
  SectorBasis basis;
  std::vector<Rational> diagonal;
  // Hopping matrix elements, all equal to -1, between basis indices (i, j).
  std::vector<std::pair<int, int>> edges;

  Vec<Rational> apply(const Vec<Rational>& v) const;
  Mat<Rational> to_dense() const;
};

// Ground-state energy E0(N, x); requires sites >= 1 and x > 0.
Rational ground_energy(int sites, const Rational& x);

// Sector Hamiltonian; requires sites >= 1 and x > 0.
SectorHamiltonian sector_hamiltonian(int sites, const Rational& x);

// Exact ground state: the kernel vector of H - E0, normalised to 1 on the
// word with all down spins before all up spins.  Verifies that the kernel is
// one-dimensional, that (H - E0) v = 0 holds exactly, and that every
// component is positive; throws DegeneracyError otherwise.  sites = 0 yields
// the empty-chain state (single component 1).
Vec<Rational> ground_state(int sites, const Rational& x);

struct FloatGroundState {
  double energy = 0;
  Eigen::VectorXd vector;
  int iterations = 0;
};

// Double-precision Lanczos with full reorthogonalisation on the same sector;
// independent of the exact route.  Throws NumericalError when the requested
// tolerance is not reached.
FloatGroundState ground_state_float(int sites, double x, int max_iterations = 400,
                                    double tolerance = 1e-12);

}  // namespace xxz
