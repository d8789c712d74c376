#include "xxzlbf/overlap.hpp"

#include "xxzlbf/determinant.hpp"

namespace xxz {

namespace {

void require_blocks(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw ArgumentError("overlap: block lengths must be nonnegative");
}

// Size and shift of the binomial determinant for O_{N1,N2}: with
// n = floor((N1+N2)/2), even-even pairs use the shift-0 matrix of size n,
// mixed-parity pairs the shift-1 matrix of size n (the same matrix for both
// orders of the pair).
struct DetShape {
  int size;
  int shift;
};

DetShape overlap_shape(int n1, int n2) {
  const int n = (n1 + n2) / 2;
  if (n1 % 2 == 0 && n2 % 2 == 0) return {n, 0};
  return {n, 1};
}

}  // namespace

IntPolynomial overlap_polynomial(int n1, int n2) {
  require_blocks(n1, n2);
  if (!overlap_defined(n1, n2)) return IntPolynomial();
  const auto shape = overlap_shape(n1, n2);
  const IntPolynomial det = bareiss_det<IntPolynomial>(
      binomial_overlap_matrix<IntPolynomial>(shape.size, shape.shift, IntPolynomial::x()));
  return IntPolynomial(gamma_factor(n1) * gamma_factor(n2)) * det;
}

Rational overlap_determinant(int n1, int n2, const Rational& x) {
  require_blocks(n1, n2);
  if (!overlap_defined(n1, n2)) return 0;
  const auto shape = overlap_shape(n1, n2);
  const Rational det = exact_det(binomial_overlap_matrix<Rational>(shape.size, shape.shift, x));
  return Rational(gamma_factor(n1) * gamma_factor(n2)) * det;
}

const Vec<Rational>& GroundStateCache::state(int sites, const Rational& x) {
  const auto key = std::make_pair(sites, x);
  auto it = states_.find(key);
  if (it == states_.end()) it = states_.emplace(key, ground_state(sites, x)).first;
  return it->second;
}

Rational overlap_contraction(int n1, int n2, const Rational& x, GroundStateCache& cache) {
  require_blocks(n1, n2);
  if (!overlap_defined(n1, n2)) return 0;
  const int n = n1 + n2;
  const SectorBasis basis_full = SectorBasis::ground_sector(n);
  const SectorBasis basis_left = SectorBasis::ground_sector(n1);
  const SectorBasis basis_right = SectorBasis::ground_sector(n2);
  const Vec<Rational>& psi_full = cache.state(n, x);
  const Vec<Rational>& psi_left = cache.state(n1, x);
  const Vec<Rational>& psi_right = cache.state(n2, x);
  Rational acc = 0;
  for (std::size_t i = 0; i < basis_left.words.size(); ++i) {
    for (std::size_t j = 0; j < basis_right.words.size(); ++j) {
      const uint32_t word = (basis_left.words[i] << n2) | basis_right.words[j];
      const long k = basis_full.index_of(word);
      if (k < 0)
        throw NumericalError("overlap_contraction: concatenated word missing from sector");
      acc += psi_full(k) * psi_left(i) * psi_right(j);
    }
  }
  return acc;
}

Rational fidelity_ratio(int n1, int n2, const Rational& x) {
  require_blocks(n1, n2);
  if (!overlap_defined(n1, n2))
    throw DegeneracyError("fidelity: undefined when both blocks are odd");
  const Rational o12 = overlap_determinant(n1, n2, x);
  const Rational d = overlap_determinant(n1, 0, x) * overlap_determinant(n2, 0, x) *
                     overlap_determinant(n1 + n2, 0, x);
  return o12 * o12 / d;
}

Rational fidelity_ratio_contraction(int n1, int n2, const Rational& x, GroundStateCache& cache) {
  require_blocks(n1, n2);
  if (!overlap_defined(n1, n2))
    throw DegeneracyError("fidelity: undefined when both blocks are odd");
  const Rational o12 = overlap_contraction(n1, n2, x, cache);
  const Rational d = overlap_contraction(n1, 0, x, cache) * overlap_contraction(n2, 0, x, cache) *
                     overlap_contraction(n1 + n2, 0, x, cache);
  return o12 * o12 / d;
}

Real log_fidelity(int n1, int n2, const Rational& x) {
  const Rational ratio = fidelity_ratio(n1, n2, x);
  if (!(ratio > 0)) throw NumericalError("log_fidelity: nonpositive fidelity ratio");
  return -log(to_real(ratio));
}

}  // namespace xxz
