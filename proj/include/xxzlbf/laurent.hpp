#pragma once

// Sparse multivariate Laurent polynomials over an exact coefficient field
// (Rational or Cyclotomic).  Terms are kept in a map from exponent vectors
// (one integer per variable, possibly negative) to nonzero coefficients.
//
// A default-constructed value is the zero polynomial with zero variables and
// is compatible with any variable count; the same holds for constants built
// from int.  All binary operations otherwise require equal variable counts.

#include "xxzlbf/cyclotomic.hpp"
#include "xxzlbf/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace xxz {

template <class Coeff>
class Laurent {
 public:
  using Exponents = std::vector<int>;
  using TermMap   = std::map<Exponents, Coeff>;

  Laurent() = default;
  Laurent(int constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponents{}, Coeff(constant));
  }

  static Laurent zero(int nvars) {
    Laurent p;
    p.nvars_ = nvars;
    return p;
  }
  static Laurent constant(int nvars, const Coeff& c) {
    Laurent p = zero(nvars);
    if (!(c == Coeff(0))) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
  }
  static Laurent monomial(int nvars, Exponents e, const Coeff& c) {
    if (static_cast<int>(e.size()) != nvars)
      throw ArgumentError("Laurent::monomial: exponent size mismatch");
    Laurent p = zero(nvars);
    if (!(c == Coeff(0))) p.terms_.emplace(std::move(e), c);
    return p;
  }
  // Single-variable monomial c * v^k.
  static Laurent var_pow(int nvars, int var, int k, const Coeff& c = Coeff(1)) {
    Exponents e(nvars, 0);
    e.at(var) = k;
    return monomial(nvars, std::move(e), c);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of a given exponent vector (zero-padded/truncated as needed).
  Coeff coeff(const Exponents& e) const {
    Exponents key = e;
    key.resize(nvars_, 0);
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return axpy(o, Coeff(1)); }
  Laurent& operator-=(const Laurent& o) { return axpy(o, Coeff(-1)); }

  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent l, const Laurent& r) { return l += r; }
  friend Laurent operator-(Laurent l, const Laurent& r) { return l -= r; }

  friend Laurent operator*(const Laurent& l, const Laurent& r) {
    auto [a, b] = harmonize(l, r);
    Laurent out = zero(std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero()) return out;
    Exponents e(out.nvars_, 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int v = 0; v < out.nvars_; ++v) e[v] = ea[v] + eb[v];
        Coeff prod = ca * cb;
        auto [it, fresh] = out.terms_.try_emplace(e, prod);
        if (!fresh) {
          it->second += prod;
          if (it->second == Coeff(0)) out.terms_.erase(it);
        }
      }
    }
    return out;
  }

  Laurent& scale(const Coeff& c) {
    if (c == Coeff(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend Laurent operator*(const Coeff& c, Laurent p) { return p.scale(c); }

  friend bool operator==(const Laurent& l, const Laurent& r) {
    auto [a, b] = harmonize(l, r);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& l, const Laurent& r) { return !(l == r); }

  // Minimum and maximum exponent of `var` over all terms; (0, 0) if zero.
  std::pair<int, int> degree_range(int var) const {
    if (terms_.empty() || var < 0 || var >= nvars_) return {0, 0};
    int lo = terms_.begin()->first[var], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[var]);
      hi = std::max(hi, e[var]);
    }
    return {lo, hi};
  }

  // Simultaneous substitution var_i := images[i].first * X^{images[i].second}
  // (a scaled monomial in the same variable space).  Scale factors must be
  // invertible whenever they meet a negative exponent.
  Laurent substituted(const std::vector<std::pair<Coeff, Exponents>>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw ArgumentError("Laurent::substituted: need one image per variable");
    for (const auto& im : images) {
      if (static_cast<int>(im.second.size()) != nvars_)
        throw ArgumentError("Laurent::substituted: image exponent size mismatch");
    }
    Laurent out = zero(nvars_);
    Exponents e(nvars_, 0);
    for (const auto& [te, tc] : terms_) {
      std::fill(e.begin(), e.end(), 0);
      Coeff c = tc;
      for (int v = 0; v < nvars_; ++v) {
        const int k = te[v];
        if (k == 0) continue;
        c = c * coeff_pow(images[v].first, k);
        for (int w = 0; w < nvars_; ++w) e[w] += k * images[v].second[w];
      }
      if (c == Coeff(0)) continue;
      auto [it, fresh] = out.terms_.try_emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == Coeff(0)) out.terms_.erase(it);
      }
    }
    return out;
  }

  // Substitution of a single variable by a scaled monomial, e.g. z := q^-1 w.
  Laurent substituted_var(int var, const Coeff& scale, const Exponents& expt) const {
    auto images = identity_images(nvars_);
    images.at(var) = {scale, expt};
    return substituted(images);
  }

  // Renames variables into a larger space: new exponent slot of old var v is
  // `slots[v]`.  Used to embed a small-chain expression into a larger chain.
  Laurent embedded(int new_nvars, const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != nvars_)
      throw ArgumentError("Laurent::embedded: need one slot per variable");
    Laurent out = zero(new_nvars);
    Exponents e(new_nvars, 0);
    for (const auto& [te, tc] : terms_) {
      std::fill(e.begin(), e.end(), 0);
      for (int v = 0; v < nvars_; ++v) {
        if (te[v] == 0) continue;
        e.at(slots[v]) += te[v];
      }
      auto [it, fresh] = out.terms_.try_emplace(e, tc);
      if (!fresh) {
        it->second += tc;
        if (it->second == Coeff(0)) out.terms_.erase(it);
      }
    }
    return out;
  }

  // Full evaluation; point values must be invertible where negative
  // exponents occur.
  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw ArgumentError("Laurent::evaluate: need one value per variable");
    Coeff acc(0);
    for (const auto& [e, c] : terms_) {
      Coeff term = c;
      for (int v = 0; v < nvars_; ++v) {
        if (e[v] != 0) term = term * coeff_pow(point[v], e[v]);
      }
      acc += term;
    }
    return acc;
  }

  // Exact quotient num/den in the Laurent ring, or std::nullopt when the
  // division is not exact.  Termination is guaranteed by confining candidate
  // quotient exponents to the per-variable box forced by exactness.
  static std::optional<Laurent> divide_exact(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw ArgumentError("Laurent::divide_exact: division by zero");
    auto [n, d] = harmonize(num, den);
    const int nv = std::max(n.nvars_, d.nvars_);
    if (n.is_zero()) return zero(nv);
    Exponents qlo(nv, 0), qhi(nv, 0);
    for (int v = 0; v < nv; ++v) {
      auto [nl, nh] = n.degree_range(v);
      auto [dl, dh] = d.degree_range(v);
      qlo[v] = nl - dl;
      qhi[v] = nh - dh;
      if (qlo[v] > qhi[v]) return std::nullopt;
    }
    Laurent quot = zero(nv);
    Laurent rem  = n;
    const auto lead_d = *d.terms_.rbegin();
    while (!rem.is_zero()) {
      const auto lead_r = *rem.terms_.rbegin();
      Exponents qe(nv);
      for (int v = 0; v < nv; ++v) {
        qe[v] = lead_r.first[v] - lead_d.first[v];
        if (qe[v] < qlo[v] || qe[v] > qhi[v]) return std::nullopt;
      }
      const Coeff qc = lead_r.second / lead_d.second;
      const Laurent m = monomial(nv, qe, qc);
      quot += m;
      rem -= m * d;
    }
    return quot;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(it->second) << ")";
      for (int v = 0; v < nvars_; ++v) {
        if (it->first[v] == 0) continue;
        os << "*" << (v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v));
        if (it->first[v] != 1) os << "^" << it->first[v];
      }
    }
    return os.str();
  }

  static std::vector<std::pair<Coeff, Exponents>> identity_images(int nvars) {
    std::vector<std::pair<Coeff, Exponents>> images;
    images.reserve(nvars);
    for (int v = 0; v < nvars; ++v) {
      Exponents e(nvars, 0);
      e[v] = 1;
      images.emplace_back(Coeff(1), std::move(e));
    }
    return images;
  }

 private:
  static Coeff coeff_pow(const Coeff& c, int e) {
    if (e >= 0) return pow_int(c, e);
    return Coeff(1) / pow_int(c, -e);
  }

  static std::string coeff_str(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Cyclotomic>) {
      return c.to_string();
    } else {
      std::ostringstream os;
      os << c;
      return os.str();
    }
  }

  Laurent& axpy(const Laurent& o, const Coeff& f) {
    if (nvars_ != o.nvars_) {
      auto [a, b] = harmonize(*this, o);
      *this = std::move(a);
      return axpy(b, f);
    }
    for (const auto& [e, c] : o.terms_) {
      Coeff add = f * c;
      auto [it, fresh] = terms_.try_emplace(e, add);
      if (!fresh) {
        it->second += add;
        if (it->second == Coeff(0)) terms_.erase(it);
      }
    }
    return *this;
  }

  // Returns copies of (l, r) brought to a common variable count; only
  // constants may be promoted.
  static std::pair<Laurent, Laurent> harmonize(const Laurent& l, const Laurent& r) {
    if (l.nvars_ == r.nvars_) return {l, r};
    const Laurent& small = l.nvars_ < r.nvars_ ? l : r;
    const Laurent& big   = l.nvars_ < r.nvars_ ? r : l;
    if (!small.is_constant())
      throw ArgumentError("Laurent: variable-count mismatch between operands");
    Laurent lifted = small.is_zero()
                         ? zero(big.nvars_)
                         : constant(big.nvars_, small.terms_.begin()->second);
    return l.nvars_ < r.nvars_ ? std::pair{lifted, big} : std::pair{big, lifted};
  }

  int nvars_ = 0;
  TermMap terms_;
};

using LaurentQ = Laurent<Rational>;
using LaurentC = Laurent<Cyclotomic>;

// The bracket [m] = m - 1/m of a scaled monomial m = c * X^e.
template <class Coeff>
Laurent<Coeff> bracket(int nvars, const Coeff& c, typename Laurent<Coeff>::Exponents e) {
  typename Laurent<Coeff>::Exponents neg(e.size());
  for (std::size_t v = 0; v < e.size(); ++v) neg[v] = -e[v];
  auto p = Laurent<Coeff>::monomial(nvars, std::move(e), c);
  p -= Laurent<Coeff>::monomial(nvars, std::move(neg), Coeff(1) / c);
  return p;
}

// Specialises q = t^2 to the primitive third root of unity: every term must
// carry an even power of t (variable 0); t^{2k} becomes w^k and the t slot is
// removed from the variable space.
Laurent<Cyclotomic> specialize_even_t_to_omega(const Laurent<Rational>& p);

// Certified exact division, as required by fraction-free elimination
// (found through argument-dependent lookup by bareiss_det).
template <class Coeff>
Laurent<Coeff> ring_divide(const Laurent<Coeff>& num, const Laurent<Coeff>& den) {
  auto q = Laurent<Coeff>::divide_exact(num, den);
  if (!q) throw NumericalError("bareiss_det: inexact Laurent division");
  return *q;
}

}  // namespace xxz

namespace Eigen {
template <class C>
struct NumTraits<xxz::Laurent<C>> : GenericNumTraits<xxz::Laurent<C>> {
  using Real       = xxz::Laurent<C>;
  using NonInteger = xxz::Laurent<C>;
  using Nested     = xxz::Laurent<C>;
  using Literal    = int;
  enum {
    IsComplex             = 0,
    IsInteger             = 0,
    IsSigned              = 1,
    RequireInitialization = 1,
    ReadCost              = 16,
    AddCost               = 200,
    MulCost               = 400,
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
