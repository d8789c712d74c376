#pragma once

// Six-vertex R- and boundary K-matrices in multiplicative (braid) form, the
// boundary qKZ vectors on up to three sites, singlet insertions, and the
// two-block overlap Omega_{N1,N2}, all as exact Laurent polynomials.
//
// Variable layout for a chain with m spectral parameters: variable 0 is t
// with q = t^2 and s = t^3 (so that s^2 = q^3), variable 1 is the boundary
// parameter beta, and variable 1+i is z_i for 1 <= i <= m.
//
// States are dense vectors over the 2^sites basis words; site 1 is the most
// significant bit, a set bit means spin down.

#include "xxzlbf/laurent.hpp"
#include "xxzlbf/scalar.hpp"

#include <vector>

namespace xxz {

using StateQ = std::vector<LaurentQ>;

inline constexpr int kTSlot = 0;
inline constexpr int kBetaSlot = 1;
inline constexpr int z_slot(int i) { return 1 + i; }
inline constexpr int var_count(int zcount) { return 2 + zcount; }

// Exponent vector of a monomial t^tp beta^bp prod z_i^{zp[i]}.
LaurentQ::Exponents mono(int zcount, int tp, int bp,
                         std::initializer_list<std::pair<int, int>> zp = {});

// [m] = m - 1/m for the monomial with the given exponents.
LaurentQ vm_bracket(int zcount, const LaurentQ::Exponents& e);

// Local operator with a scalar denominator: R-matrices are 4x4 numerators
// over [q/m], K-matrices 2x2 numerators over [beta'/m].
struct LocalOp {
  Mat<LaurentQ> num;
  LaurentQ den;
};

// Braid R-matrix R(m) with rows/columns ordered (uu, ud, du, dd):
//   diag part  a = [q m]/[q/m] on uu and dd,
//   inner block ( c b ; b c ) with b = [m]/[q/m], c = [q]/[q/m].
LocalOp braid_r(int zcount, const LaurentQ::Exponents& arg);

// Boundary matrix K(m; b) = diag(1, [b m]/[b/m]); the numerator is
// diag([b/m], [b m]) with denominator [b/m].
LocalOp boundary_k(int zcount, const LaurentQ::Exponents& z_arg,
                   const LaurentQ::Exponents& beta_arg);

// Embeds a 4x4 two-site operator acting on (site, site+1), or a 2x2 one-site
// operator acting on site, into the full 2^sites-dimensional space.
Mat<LaurentQ> embed_two_site(const Mat<LaurentQ>& op, int site, int sites);
Mat<LaurentQ> embed_one_site(const Mat<LaurentQ>& op, int site, int sites);

StateQ apply_operator(const Mat<LaurentQ>& op, const StateQ& state);

// The boundary qKZ vector Psi_N for 0 <= N <= 3, built from its nonzero
// components; the N = 3 middle component is obtained by a certified exact
// division.  Components live in the variables (t, beta, z_1..z_N).
StateQ qkz_state(int sites);

// Singlet insertion Xi^i_N : V^{N-2} -> V^N placing |ud> - |du> at sites
// (position, position+1); sites_out = N.
StateQ singlet_insert(const StateQ& state, int position, int sites_out);

// Transpose pairing <a|b> = sum_w a_w b_w (no conjugation).
LaurentQ transpose_pairing(const StateQ& a, const StateQ& b);

// Applies a simultaneous scaled-monomial substitution to every component.
StateQ substitute_state(const StateQ& state,
                        const std::vector<std::pair<Rational, LaurentQ::Exponents>>& images);

// Omega_{N1,N2} in the variables (t, beta, z_1..z_{N1+N2}): the bra is
// Psi_N at (z_1^{-1},...,z_{N1}^{-1}, q^{-3}z_{N1+1}^{-1},...,q^{-3}z_N^{-1}),
// paired with Psi_{N1} (x) Psi_{N2}.
LaurentQ block_overlap(int n1, int n2);

}  // namespace xxz
