#include "xxzlbf/spin_chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace xxz {

namespace {

void require_chain(int sites) {
  if (sites < 0) throw ArgumentError("chain length must be nonnegative");
  if (sites > 30) throw ArgumentError("chain length too large for this basis representation");
}

void require_positive(const Rational& x) {
  if (x <= 0) throw ArgumentError("boundary parameter x must be positive");
}

}  // namespace

SectorBasis SectorBasis::ground_sector(int sites) {
  require_chain(sites);
  SectorBasis b;
  b.sites = sites;
  b.downs = sites / 2;
  if (sites == 0) {
    b.words = {0};
    return b;
  }
  const std::uint32_t limit = std::uint32_t(1) << sites;
  for (std::uint32_t w = 0; w < limit; ++w) {
    if (std::popcount(w) == b.downs) b.words.push_back(w);
  }
  return b;
}

int SectorBasis::index_of(std::uint32_t word) const {
  auto it = std::lower_bound(words.begin(), words.end(), word);
  if (it == words.end() || *it != word) return -1;
  return static_cast<int>(it - words.begin());
}

Vec<Rational> SectorHamiltonian::apply(const Vec<Rational>& v) const {
  const int m = basis.dimension();
  if (v.size() != m) throw ArgumentError("SectorHamiltonian::apply: size mismatch");
  Vec<Rational> out(m);
  for (int i = 0; i < m; ++i) out(i) = diagonal[i] * v(i);
  for (const auto& [i, j] : edges) {
    out(i) -= v(j);
    out(j) -= v(i);
  }
  return out;
}

Mat<Rational> SectorHamiltonian::to_dense() const {
  const int m = basis.dimension();
  Mat<Rational> h(m, m);
  h.setZero();
  for (int i = 0; i < m; ++i) h(i, i) = diagonal[i];
  for (const auto& [i, j] : edges) {
    h(i, j) = Rational(-1);
    h(j, i) = Rational(-1);
  }
  return h;
}

Rational ground_energy(int sites, const Rational& x) {
  if (sites < 1) throw ArgumentError("ground_energy: need at least one site");
  require_positive(x);
  const Rational one_minus_x = 1 - x;
  return Rational(-(3 * sites - 1), 4) - one_minus_x * one_minus_x / (2 * x);
}

SectorHamiltonian sector_hamiltonian(int sites, const Rational& x) {
  if (sites < 1) throw ArgumentError("sector_hamiltonian: need at least one site");
  require_positive(x);
  SectorHamiltonian h;
  h.basis = SectorBasis::ground_sector(sites);
  const int m = h.basis.dimension();
  const Rational p    = Rational(1, 4) - x / 2;
  const Rational pbar = Rational(1, 4) - Rational(1, 2) / x;

  h.diagonal.resize(m);
  for (int i = 0; i < m; ++i) {
    const std::uint32_t w = h.basis.words[i];
    const auto sz = [&](int site) {  // sz eigenvalue at 1-based site
      return (w >> (sites - site)) & 1U ? -1 : 1;
    };
    Rational d(0);
    // -1/2 * Delta * sz sz per bond with Delta = -1/2.
    for (int s = 1; s < sites; ++s) d += Rational(sz(s) * sz(s + 1), 4);
    d += p * sz(1) + pbar * sz(sites);
    h.diagonal[i] = d;
  }

  // Hopping: -1 between words related by swapping adjacent opposite spins.
  for (int i = 0; i < m; ++i) {
    const std::uint32_t w = h.basis.words[i];
    for (int s = 1; s < sites; ++s) {
      const int b1 = sites - s, b2 = sites - s - 1;
      const std::uint32_t v1 = (w >> b1) & 1U, v2 = (w >> b2) & 1U;
      if (v1 == v2) continue;
      const std::uint32_t flipped = w ^ ((1U << b1) | (1U << b2));
      if (flipped > w) {
        const int j = h.basis.index_of(flipped);
        h.edges.emplace_back(i, j);
      }
    }
  }
  return h;
}

namespace {

// Exact kernel vector of a singular sparse rational matrix, computed by
// sparse Gaussian elimination with Markowitz-style pivoting.  Requires the
// kernel to be exactly one-dimensional.  This is the small-size route and
// the fallback behind the modular solver below; it is also the arbiter of
// rank defects, reporting them as DegeneracyError.
std::vector<Rational> sparse_kernel_vector(int m, std::vector<std::map<int, Rational>> rows) {
  std::vector<std::set<int>> col_rows(m);
  for (int r = 0; r < m; ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
  }
  std::vector<bool> col_done(m, false);
  std::vector<std::pair<int, int>> pivots;  // (row, col) in processing order
  pivots.reserve(m);

  for (;;) {
    // Pick the unpivoted column with fewest active rows, then the shortest
    // row within it.
    int best_col = -1;
    std::size_t best_count = 0;
    for (int c = 0; c < m; ++c) {
      if (col_done[c] || col_rows[c].empty()) continue;
      if (best_col < 0 || col_rows[c].size() < best_count) {
        best_col = c;
        best_count = col_rows[c].size();
        if (best_count == 1) break;
      }
    }
    if (best_col < 0) break;
    int pivot_row = -1;
    std::size_t best_len = 0;
    for (int r : col_rows[best_col]) {
      if (pivot_row < 0 || rows[r].size() < best_len) {
        pivot_row = r;
        best_len = rows[r].size();
      }
    }

    const Rational pivot_value = rows[pivot_row].at(best_col);
    std::vector<int> targets(col_rows[best_col].begin(), col_rows[best_col].end());
    for (int r : targets) {
      if (r == pivot_row) continue;
      const Rational factor = rows[r].at(best_col) / pivot_value;
      for (const auto& [c, v] : rows[pivot_row]) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, -factor * v);
          col_rows[c].insert(r);
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            rows[r].erase(it);
            col_rows[c].erase(r);
          }
        }
      }
    }
    // Remove the pivot row from the active column lists.
    for (const auto& [c, v] : rows[pivot_row]) col_rows[c].erase(pivot_row);
    col_done[best_col] = true;
    pivots.emplace_back(pivot_row, best_col);
  }

  const int rank = static_cast<int>(pivots.size());
  if (m - rank != 1)
    throw DegeneracyError("kernel dimension is " + std::to_string(m - rank) +
                          ", expected 1 (degenerate or inconsistent system)");
  int free_col = -1;
  for (int c = 0; c < m; ++c) {
    if (!col_done[c]) {
      free_col = c;
      break;
    }
  }

  std::vector<Rational> v(m, Rational(0));
  v[free_col] = 1;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto [r, pc] = *it;
    Rational acc(0);
    for (const auto& [c, value] : rows[r]) {
      if (c != pc) acc += value * v[c];
    }
    v[pc] = -acc / rows[r].at(pc);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fast exact kernel route for large sectors: one LU factorisation modulo a
// word-sized prime, Dixon p-adic lifting of the solution normalised at a
// chosen column, and rational reconstruction.  The candidate is re-verified
// exactly against every row before it is returned, and invertibility of the
// pivot block modulo p certifies that the kernel is one-dimensional over the
// rationals.  Any failure (unlucky prime, genuine degeneracy, reconstruction
// running out of digits) returns nullopt and the caller falls back to the
// exact sparse elimination above.

// Deterministic Miller-Rabin below 2^32 (bases 2, 3, 5, 7 suffice).
bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (const std::uint32_t q : {2U, 3U, 5U, 7U}) {
    if (n % q == 0) return n == q;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (const std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL}) {
    std::uint64_t y = 1, b = a % n, e = d;
    while (e) {
      if (e & 1ULL) y = y * b % n;
      b = b * b % n;
      e >>= 1ULL;
    }
    if (y == 1 || y == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      y = y * y % n;
      if (y == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// Barrett reduction for a fixed odd modulus p < 2^31; valid for any x < 2^63.
struct Barrett {
  std::uint64_t p;
  std::uint64_t magic;  // floor(2^64 / p)
  explicit Barrett(std::uint64_t prime) : p(prime), magic(~std::uint64_t{0} / prime) {}
  std::uint64_t reduce(std::uint64_t x) const {
    const auto q =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
};

// Dense LU with partial row pivoting modulo p of an m x (m-1) matrix.  After
// factor(), slots 0..m-2 hold the pivot rows (multipliers below the diagonal,
// U on and above it) and solve() handles the square pivot block.
struct ModularLU {
  int rows;
  int cols;
  Barrett bar;
  std::vector<std::uint32_t> a;  // row-major, rows x cols
  std::vector<int> perm;         // perm[slot] = original row index
  std::vector<std::uint32_t> dinv;

  ModularLU(int m, int n, std::uint32_t prime)
      : rows(m), cols(n), bar(prime), a(std::size_t(m) * n, 0), perm(m), dinv(n, 0) {
    for (int i = 0; i < m; ++i) perm[i] = i;
  }

  std::uint64_t inv(std::uint64_t v) const {  // Fermat inverse, p prime
    std::uint64_t acc = 1, b = v, e = bar.p - 2;
    while (e) {
      if (e & 1ULL) acc = bar.reduce(acc * b);
      b = bar.reduce(b * b);
      e >>= 1ULL;
    }
    return acc;
  }

  // False if some column has no nonzero pivot: an unlucky prime, or column
  // dependence over the rationals (kernel wider than one dimension).
  bool factor() {
    for (int k = 0; k < cols; ++k) {
      int pr = -1;
      for (int i = k; i < rows && pr < 0; ++i)
        if (a[std::size_t(i) * cols + k] != 0) pr = i;
      if (pr < 0) return false;
      if (pr != k) {
        for (int c = 0; c < cols; ++c)
          std::swap(a[std::size_t(pr) * cols + c], a[std::size_t(k) * cols + c]);
        std::swap(perm[pr], perm[k]);
      }
      const std::uint64_t piv_inv = inv(a[std::size_t(k) * cols + k]);
      dinv[k] = static_cast<std::uint32_t>(piv_inv);
      const std::uint32_t* src = &a[std::size_t(k) * cols];
      for (int i = k + 1; i < rows; ++i) {
        std::uint32_t* dst = &a[std::size_t(i) * cols];
        if (dst[k] == 0) continue;
        const std::uint64_t f = bar.reduce(dst[k] * piv_inv);
        dst[k] = static_cast<std::uint32_t>(f);
        if (f == 0) continue;
        const std::uint64_t nf = bar.p - f;
        for (int c = k + 1; c < cols; ++c)
          dst[c] = static_cast<std::uint32_t>(bar.reduce(dst[c] + nf * src[c]));
      }
    }
    return true;
  }

  // In place: y enters as the right-hand side indexed by pivot slot and
  // leaves as the solution indexed by column.
  void solve(std::vector<std::uint64_t>& y) const {
    for (int k = 0; k < cols; ++k) {
      const std::uint64_t yk = y[k];
      if (yk == 0) continue;
      for (int i = k + 1; i < cols; ++i) {
        const std::uint64_t f = a[std::size_t(i) * cols + k];
        if (f) y[i] = bar.reduce(y[i] + (bar.p - f) * yk);
      }
    }
    for (int k = cols - 1; k >= 0; --k) {
      std::uint64_t acc = y[k];
      const std::uint32_t* row = &a[std::size_t(k) * cols];
      for (int c = k + 1; c < cols; ++c)
        if (y[c]) acc = bar.reduce(acc + (bar.p - row[c]) * y[c]);
      y[k] = bar.reduce(acc * dinv[k]);
    }
  }
};

// Rational reconstruction (Wang): residue u in [0, modulus) -> n/d with
// |n| <= bound and 0 < d <= bound, if such a pair emerges from the Euclidean
// remainder sequence.
std::optional<Rational> reconstruct_rational(const Int& u, const Int& modulus,
                                             const Int& bound) {
  Int r0 = modulus, r1 = u;
  Int t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = std::move(r2);
    t0 = t1;
    t1 = std::move(t2);
  }
  if (t1 == 0) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return std::nullopt;
  return Rational(r1, t1);
}

// Kernel vector of the m x m rational matrix in sparse row form, normalised
// to value one at column `base`.  nullopt if the modular route cannot settle
// the system; never throws on rank defects (the exact elimination reports
// those).
std::optional<std::vector<Rational>> modular_kernel_vector(
    int m, const std::vector<std::map<int, Rational>>& rows, int base) {
  const int n = m - 1;
  if (n < 1) return std::nullopt;

  // Scale every row to integers; row scaling preserves the kernel.
  std::vector<std::vector<std::pair<int, Int>>> int_rows(m);
  for (int r = 0; r < m; ++r) {
    Int den(1);
    for (const auto& [c, v] : rows[r]) den = lcm(den, denominator(v));
    int_rows[r].reserve(rows[r].size());
    for (const auto& [c, v] : rows[r])
      int_rows[r].emplace_back(c, numerator(v * Rational(den)));
  }
  const auto compact = [base](int c) { return c < base ? c : c - 1; };

  std::uint32_t prime = 2147483647U;  // scan downward from the largest 31-bit prime
  for (int attempt = 0; attempt < 4; ++attempt) {
    while (!is_prime(prime)) --prime;
    const Int big_p(prime);

    ModularLU lu(m, n, prime);
    for (int r = 0; r < m; ++r) {
      for (const auto& [c, v] : int_rows[r]) {
        if (c == base) continue;
        Int t = v % big_p;
        if (t < 0) t += big_p;
        lu.a[std::size_t(r) * n + compact(c)] = t.convert_to<std::uint32_t>();
      }
    }
    if (!lu.factor()) {
      --prime;
      continue;
    }

    // Move the base column to the right-hand side (it carries value one) and
    // restrict to the pivot rows; lift the solution p-adically.
    std::vector<Int> residual(n, Int(0));
    for (int k = 0; k < n; ++k) {
      for (const auto& [c, v] : int_rows[lu.perm[k]])
        if (c == base) residual[k] = -v;
    }
    std::vector<Int> acc(n, Int(0));
    Int modulus(1);
    std::vector<std::uint64_t> y(n);
    int next_check = 6;
    for (int step = 0; step < 512; ++step) {
      for (int k = 0; k < n; ++k) {
        Int t = residual[k] % big_p;
        if (t < 0) t += big_p;
        y[k] = t.convert_to<std::uint32_t>();
      }
      lu.solve(y);
      for (int k = 0; k < n; ++k)
        if (y[k]) acc[k] += modulus * Int(y[k]);
      for (int k = 0; k < n; ++k) {
        Int& s = residual[k];
        for (const auto& [c, v] : int_rows[lu.perm[k]]) {
          if (c == base) continue;
          const std::uint64_t yc = y[compact(c)];
          if (yc) s -= v * Int(yc);
        }
        s /= big_p;  // exact: B y matches the residual mod p
      }
      modulus *= big_p;

      if (step + 1 < next_check) continue;
      next_check += next_check / 2 + 1;
      const Int bound = sqrt(Int((modulus - 1) >> 1));
      std::vector<Rational> full(m);
      full[base] = 1;
      bool reconstructed = true;
      for (int c = 0; c < m && reconstructed; ++c) {
        if (c == base) continue;
        const auto value = reconstruct_rational(acc[compact(c)], modulus, bound);
        if (value)
          full[c] = *value;
        else
          reconstructed = false;
      }
      if (!reconstructed) continue;
      // Exact membership check over every row, including the one outside the
      // pivot block.
      bool exact = true;
      for (int r = 0; r < m && exact; ++r) {
        Rational s(0);
        for (const auto& [c, v] : rows[r]) s += v * full[c];
        exact = s == 0;
      }
      if (exact) return full;
    }
    return std::nullopt;  // lifted past every sensible digit budget
  }
  return std::nullopt;
}

}  // namespace

Vec<Rational> ground_state(int sites, const Rational& x) {
  require_chain(sites);
  require_positive(x);
  if (sites == 0) {
    Vec<Rational> v(1);
    v(0) = 1;
    return v;
  }
  const SectorHamiltonian h = sector_hamiltonian(sites, x);
  const int m = h.basis.dimension();
  const Rational e0 = ground_energy(sites, x);

  std::vector<std::map<int, Rational>> rows(m);
  for (int i = 0; i < m; ++i) {
    const Rational d = h.diagonal[i] - e0;
    if (d != 0) rows[i][i] = d;
  }
  for (const auto& [i, j] : h.edges) {
    rows[i][j] = Rational(-1);
    rows[j][i] = Rational(-1);
  }

  // Normalise on the word with all downs first (the smallest index whose
  // word is downs followed by ups: bits 1..downs set at the top).
  const std::uint32_t base_word =
      h.basis.downs == 0 ? 0U
                         : ((std::uint32_t(1) << h.basis.downs) - 1U) << (sites - h.basis.downs);
  const int base = h.basis.index_of(base_word);
  if (base < 0) throw DegeneracyError("ground_state: vanishing base component");

  // Large sectors go through the modular solver; it hands back nullopt on
  // any doubt and the exact elimination then settles the system (including
  // raising DegeneracyError when the kernel is not one-dimensional).
  std::vector<Rational> kernel;
  if (m > 96) {
    if (auto fast = modular_kernel_vector(m, rows, base)) kernel = std::move(*fast);
  }
  if (kernel.empty()) kernel = sparse_kernel_vector(m, std::move(rows));

  if (kernel[static_cast<std::size_t>(base)] == 0)
    throw DegeneracyError("ground_state: vanishing base component");
  const Rational scale = kernel[static_cast<std::size_t>(base)];

  Vec<Rational> v(m);
  for (int i = 0; i < m; ++i) {
    v(i) = kernel[static_cast<std::size_t>(i)] / scale;
    if (v(i) <= 0) throw DegeneracyError("ground_state: nonpositive component");
  }

  // Exact residual check (H - E0) v = 0.
  Vec<Rational> hv = h.apply(v);
  for (int i = 0; i < m; ++i) {
    if (hv(i) != e0 * v(i)) throw DegeneracyError("ground_state: exact eigen equation failed");
  }
  return v;
}

FloatGroundState ground_state_float(int sites, double x, int max_iterations, double tolerance) {
  if (sites < 1) throw ArgumentError("ground_state_float: need at least one site");
  if (!(x > 0)) throw ArgumentError("ground_state_float: x must be positive");
  const SectorBasis basis = SectorBasis::ground_sector(sites);
  const int m = basis.dimension();

  // Assemble diagonal and edges once (double precision).
  std::vector<double> diag(m);
  const double p = 0.25 - x / 2, pbar = 0.25 - 0.5 / x;
  for (int i = 0; i < m; ++i) {
    const std::uint32_t w = basis.words[i];
    const auto sz = [&](int site) { return (w >> (sites - site)) & 1U ? -1.0 : 1.0; };
    double d = 0;
    for (int s = 1; s < sites; ++s) d += sz(s) * sz(s + 1) / 4;
    diag[i] = d + p * sz(1) + pbar * sz(sites);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    const std::uint32_t w = basis.words[i];
    for (int s = 1; s < sites; ++s) {
      const int b1 = sites - s, b2 = sites - s - 1;
      if (((w >> b1) & 1U) == ((w >> b2) & 1U)) continue;
      const std::uint32_t flipped = w ^ ((1U << b1) | (1U << b2));
      if (flipped > w) edges.emplace_back(i, basis.index_of(flipped));
    }
  }
  const auto apply = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out(m);
    for (int i = 0; i < m; ++i) out(i) = diag[i] * v(i);
    for (const auto& [i, j] : edges) {
      out(i) -= v(j);
      out(j) -= v(i);
    }
    return out;
  };

  // Lanczos with full reorthogonalisation.
  std::vector<Eigen::VectorXd> basis_vectors;
  std::vector<double> alpha, beta;
  Eigen::VectorXd q = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
  basis_vectors.push_back(q);
  const int cap = std::min(max_iterations, m);
  for (int k = 0; k < cap; ++k) {
    Eigen::VectorXd w = apply(basis_vectors[k]);
    const double a = basis_vectors[k].dot(w);
    alpha.push_back(a);
    w -= a * basis_vectors[k];
    if (k > 0) w -= beta[k - 1] * basis_vectors[k - 1];
    for (const auto& b : basis_vectors) w -= b.dot(w) * b;  // full reorthogonalisation
    const double b = w.norm();

    // Smallest Ritz pair of the current tridiagonal matrix; beta_k times the
    // last eigenvector component bounds the true residual of the Ritz pair.
    const int kk = k + 1;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(kk, kk);
    for (int i = 0; i < kk; ++i) t(i, i) = alpha[i];
    for (int i = 0; i + 1 < kk; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const double theta = es.eigenvalues()(0);
    const double estimate = b * std::abs(es.eigenvectors()(kk - 1, 0));

    if (estimate <= tolerance * std::max(1.0, std::abs(theta)) || b < 1e-14 || kk == m) {
      Eigen::VectorXd ground = Eigen::VectorXd::Zero(m);
      for (int i = 0; i < kk; ++i) ground += es.eigenvectors()(i, 0) * basis_vectors[i];
      ground.normalize();
      const Eigen::VectorXd hg = apply(ground);
      const double residual = (hg - theta * ground).norm();
      if (residual > 1e-8 * std::max(1.0, std::abs(theta)))
        throw NumericalError("ground_state_float: Lanczos residual too large");
      return {theta, ground, kk};
    }
    beta.push_back(b);
    basis_vectors.push_back(w / b);
  }
  throw NumericalError("ground_state_float: no convergence within iteration budget");
}

}  // namespace xxz
