#pragma once

// Ground-state block overlaps O_{N1,N2}(x) of the open chain at Delta = -1/2
// and the logarithmic bipartite fidelity built from them.  Two exact routes
// are provided: the closed determinant form (gamma prefactors times binomial
// determinants) and the direct contraction of exact sector ground states,
// which serves as an independent oracle.  The two agree up to a global
// x-independent sign per block pair.

#include "xxzlbf/characters.hpp"
#include "xxzlbf/combinatorics.hpp"
#include "xxzlbf/polynomial.hpp"
#include "xxzlbf/scalar.hpp"
#include "xxzlbf/spin_chain.hpp"

#include <map>
#include <utility>

namespace xxz {

// True unless both block lengths are odd (the overlap vanishes identically
// then and the fidelity is undefined).
inline bool overlap_defined(int n1, int n2) { return n1 % 2 == 0 || n2 % 2 == 0; }

// O_{N1,N2} as an x-polynomial with integer coefficients; the zero
// polynomial when both blocks are odd.
IntPolynomial overlap_polynomial(int n1, int n2);

// O_{N1,N2}(x) via the determinant form, exactly.
Rational overlap_determinant(int n1, int n2, const Rational& x);

// Cache of exact sector ground states keyed by (sites, x).
class GroundStateCache {
 public:
  const Vec<Rational>& state(int sites, const Rational& x);

 private:
  std::map<std::pair<int, Rational>, Vec<Rational>> states_;
};

// O_{N1,N2}(x) contracted from exact ground states: the transpose pairing
// sum_{w1,w2} psi_N[(w1 w2)] psi_{N1}[w1] psi_{N2}[w2], no conjugation, all
// vectors normalised to coefficient one on the base word.  Returns zero when
// both blocks are odd (magnetisation sectors do not match).
Rational overlap_contraction(int n1, int n2, const Rational& x, GroundStateCache& cache);

// Exact fidelity ratio O_{N1,N2}^2 / (O_{N1,0} O_{N2,0} O_{N1+N2,0}) from the
// determinant route.  Throws DegeneracyError when both blocks are odd.
Rational fidelity_ratio(int n1, int n2, const Rational& x);

// Same ratio from ground-state contractions (squaring removes the sign
// ambiguity, so the two routes agree exactly).
Rational fidelity_ratio_contraction(int n1, int n2, const Rational& x, GroundStateCache& cache);

// Logarithmic bipartite fidelity F_{N1,N2}(x) = -ln fidelity_ratio.
Real log_fidelity(int n1, int n2, const Rational& x);

}  // namespace xxz
