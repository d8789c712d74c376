#pragma once

// Exact enumeration numbers entering the overlap normalisation: binomials,
// vertically symmetric alternating sign matrices (VSASM), cyclically
// symmetric transpose complement plane partitions (CSTCPP), and the refined
// count of off-diagonally symmetric alternating sign matrices (ODSASM).

#include "xxzlbf/polynomial.hpp"
#include "xxzlbf/scalar.hpp"

namespace xxz {

// n! for n >= 0 (cached).
const Int& factorial(long n);

// Binomial coefficient C(n, k); requires n >= 0, returns 0 unless 0 <= k <= n.
Int binomial(long n, long k);

// Number of (2k+1) x (2k+1) vertically symmetric alternating sign matrices;
// `size` must be odd and >= 1.
Int vsasm_count(long size);

// Number of cyclically symmetric transpose complement plane partitions in a
// cube of side `size`; `size` must be even and >= 2.
Int cstcpp_count(long size);

// Normalisation constant gamma_N of the squared-norm/overlap formulas:
// VSASM count of size N+1 for even N, CSTCPP count of size N+1 for odd N.
Int gamma_factor(int n);

// Exponent nu_N of the power of 3 in the homogeneous character value:
// n(n-1) for N = 2n and n^2 for N = 2n+1.
long nu_exponent(int n);

// Number of off-diagonally symmetric alternating sign matrices of size
// 2n x 2n whose unique first-row +1 sits at column i.  `size` = 2n must be
// even and >= 2, and 1 <= i <= size.
Int odsasm_count(long size, long i);

// The mixed-parity overlap determinant of order n expands in x with ODSASM
// coefficients: det = sum_{i=0..2n} odsasm_count(2n+2, i+2) x^i.
IntPolynomial odsasm_polynomial(int n);

}  // namespace xxz
