#include "xxzlbf/vertex_model.hpp"

#include <utility>

namespace xxz {

namespace {

void require_sites(int sites, int max_sites) {
  if (sites < 0 || sites > max_sites) throw ArgumentError("vertex model: unsupported site count");
}

}  // namespace

LaurentQ::Exponents mono(int zcount, int tp, int bp,
                         std::initializer_list<std::pair<int, int>> zp) {
  LaurentQ::Exponents e(var_count(zcount), 0);
  e[kTSlot] = tp;
  e[kBetaSlot] = bp;
  for (const auto& [i, p] : zp) {
    if (i < 1 || i > zcount) throw ArgumentError("mono: spectral index out of range");
    e[z_slot(i)] = p;
  }
  return e;
}

LaurentQ vm_bracket(int zcount, const LaurentQ::Exponents& e) {
  return bracket<Rational>(var_count(zcount), Rational(1), e);
}

namespace {

LaurentQ::Exponents shifted_t(LaurentQ::Exponents e, int dt) {
  e[kTSlot] += dt;
  return e;
}

LaurentQ::Exponents negated(const LaurentQ::Exponents& e) {
  LaurentQ::Exponents r(e.size());
  for (std::size_t v = 0; v < e.size(); ++v) r[v] = -e[v];
  return r;
}

}  // namespace

LocalOp braid_r(int zcount, const LaurentQ::Exponents& arg) {
  const int nv = var_count(zcount);
  const LaurentQ a = vm_bracket(zcount, shifted_t(arg, 2));            // [q m]
  const LaurentQ b = vm_bracket(zcount, arg);                          // [m]
  const LaurentQ c = vm_bracket(zcount, mono(zcount, 2, 0));           // [q]
  LocalOp op;
  op.den = vm_bracket(zcount, shifted_t(negated(arg), 2));             // [q/m]
  op.num = Mat<LaurentQ>::Constant(4, 4, LaurentQ::zero(nv));
  op.num(0, 0) = a;
  op.num(1, 1) = c;
  op.num(1, 2) = b;
  op.num(2, 1) = b;
  op.num(2, 2) = c;
  op.num(3, 3) = a;
  return op;
}

LocalOp boundary_k(int zcount, const LaurentQ::Exponents& z_arg,
                   const LaurentQ::Exponents& beta_arg) {
  const int nv = var_count(zcount);
  LaurentQ::Exponents up(beta_arg), down(beta_arg);
  for (std::size_t v = 0; v < up.size(); ++v) {
    up[v] -= z_arg[v];    // beta'/m
    down[v] += z_arg[v];  // beta' m
  }
  LocalOp op;
  op.den = vm_bracket(zcount, up);
  op.num = Mat<LaurentQ>::Constant(2, 2, LaurentQ::zero(nv));
  op.num(0, 0) = op.den;
  op.num(1, 1) = vm_bracket(zcount, down);
  return op;
}

Mat<LaurentQ> embed_two_site(const Mat<LaurentQ>& op, int site, int sites) {
  if (op.rows() != 4 || op.cols() != 4) throw ArgumentError("embed_two_site: operator must be 4x4");
  if (site < 1 || site + 1 > sites) throw ArgumentError("embed_two_site: site out of range");
  const int dim = 1 << sites;
  const int low = sites - site - 1;  // number of sites to the right of the pair
  Mat<LaurentQ> full = Mat<LaurentQ>::Constant(dim, dim, LaurentQ::zero(0));
  for (int w = 0; w < dim; ++w) {
    const int col_bits = (w >> low) & 3;
    for (int row_bits = 0; row_bits < 4; ++row_bits) {
      const LaurentQ& entry = op(row_bits, col_bits);
      if (entry.is_zero()) continue;
      const int w_out = (w & ~(3 << low)) | (row_bits << low);
      full(w_out, w) += entry;
    }
  }
  return full;
}

Mat<LaurentQ> embed_one_site(const Mat<LaurentQ>& op, int site, int sites) {
  if (op.rows() != 2 || op.cols() != 2) throw ArgumentError("embed_one_site: operator must be 2x2");
  if (site < 1 || site > sites) throw ArgumentError("embed_one_site: site out of range");
  const int dim = 1 << sites;
  const int low = sites - site;
  Mat<LaurentQ> full = Mat<LaurentQ>::Constant(dim, dim, LaurentQ::zero(0));
  for (int w = 0; w < dim; ++w) {
    const int col_bit = (w >> low) & 1;
    for (int row_bit = 0; row_bit < 2; ++row_bit) {
      const LaurentQ& entry = op(row_bit, col_bit);
      if (entry.is_zero()) continue;
      const int w_out = (w & ~(1 << low)) | (row_bit << low);
      full(w_out, w) += entry;
    }
  }
  return full;
}

StateQ apply_operator(const Mat<LaurentQ>& op, const StateQ& state) {
  const auto dim = static_cast<Eigen::Index>(state.size());
  if (op.rows() != dim || op.cols() != dim)
    throw ArgumentError("apply_operator: dimension mismatch");
  StateQ out(state.size(), LaurentQ::zero(0));
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (op(r, c).is_zero() || state[c].is_zero()) continue;
      out[r] += op(r, c) * state[c];
    }
  }
  return out;
}

StateQ qkz_state(int sites) {
  require_sites(sites, 3);
  const int nv = var_count(sites);
  StateQ psi(static_cast<std::size_t>(1) << sites, LaurentQ::zero(nv));
  switch (sites) {
    case 0:
      psi[0] = LaurentQ::constant(nv, 1);
      break;
    case 1:
      psi[0b0] = LaurentQ::constant(nv, 1);
      break;
    case 2:
      // The up-down component's sign is forced by the exchange relation
      // acting on the factorised down-up component.
      psi[0b10] = vm_bracket(2, mono(2, 0, 1, {{1, 1}}));   // [beta z1]
      psi[0b01] = -vm_bracket(2, mono(2, 2, 1, {{2, 1}}));  // -[q beta z2]
      break;
    case 3: {
      const LaurentQ b_z1 = vm_bracket(3, mono(3, 0, 1, {{1, 1}}));
      const LaurentQ b_z2 = vm_bracket(3, mono(3, 0, 1, {{2, 1}}));
      const LaurentQ qb_z3 = vm_bracket(3, mono(3, 2, 1, {{3, 1}}));
      const LaurentQ q = vm_bracket(3, mono(3, 2, 0));
      const LaurentQ q_z3_over_z2 = vm_bracket(3, mono(3, 2, 0, {{3, 1}, {2, -1}}));
      const LaurentQ q2_z2z3 = vm_bracket(3, mono(3, 4, 0, {{2, 1}, {3, 1}}));
      const LaurentQ q_z2_over_z1 = vm_bracket(3, mono(3, 2, 0, {{2, 1}, {1, -1}}));
      const LaurentQ q_z1z2 = vm_bracket(3, mono(3, 2, 0, {{1, 1}, {2, 1}}));
      const LaurentQ q_z3_over_z1 = vm_bracket(3, mono(3, 2, 0, {{3, 1}, {1, -1}}));
      const LaurentQ q2_z1z3 = vm_bracket(3, mono(3, 4, 0, {{1, 1}, {3, 1}}));
      const LaurentQ z2_over_z1 = vm_bracket(3, mono(3, 0, 0, {{2, 1}, {1, -1}}));
      psi[0b100] = b_z1 * q_z3_over_z2 * q2_z2z3;
      psi[0b001] = qb_z3 * q_z2_over_z1 * q_z1z2;
      const LaurentQ numerator =
          q * psi[0b100] - b_z2 * q_z2_over_z1 * q_z3_over_z1 * q2_z1z3;
      auto middle = LaurentQ::divide_exact(numerator, z2_over_z1);
      if (!middle)
        throw NumericalError("qkz_state: middle component division is not exact");
      psi[0b010] = *middle;
      break;
    }
    default:
      break;
  }
  return psi;
}

StateQ singlet_insert(const StateQ& state, int position, int sites_out) {
  if (sites_out < 2) throw ArgumentError("singlet_insert: need at least two sites");
  if (position < 1 || position > sites_out - 1)
    throw ArgumentError("singlet_insert: position out of range");
  const int sites_in = sites_out - 2;
  if (state.size() != (static_cast<std::size_t>(1) << sites_in))
    throw ArgumentError("singlet_insert: input dimension mismatch");
  const int low = sites_in - (position - 1);  // sites moved below the singlet
  StateQ out(static_cast<std::size_t>(1) << sites_out, LaurentQ::zero(0));
  for (std::size_t w = 0; w < state.size(); ++w) {
    if (state[w].is_zero()) continue;
    const auto hi = static_cast<uint32_t>(w) >> low;
    const auto lo = static_cast<uint32_t>(w) & ((1u << low) - 1);
    const uint32_t up_down = (hi << (low + 2)) | (0b01u << low) | lo;
    const uint32_t down_up = (hi << (low + 2)) | (0b10u << low) | lo;
    out[up_down] += state[w];
    out[down_up] -= state[w];
  }
  return out;
}

LaurentQ transpose_pairing(const StateQ& a, const StateQ& b) {
  if (a.size() != b.size()) throw ArgumentError("transpose_pairing: dimension mismatch");
  LaurentQ acc = LaurentQ::zero(0);
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w].is_zero() || b[w].is_zero()) continue;
    acc += a[w] * b[w];
  }
  return acc;
}

StateQ substitute_state(const StateQ& state,
                        const std::vector<std::pair<Rational, LaurentQ::Exponents>>& images) {
  StateQ out;
  out.reserve(state.size());
  for (const auto& component : state) out.push_back(component.substituted(images));
  return out;
}

LaurentQ block_overlap(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw ArgumentError("block_overlap: block lengths must be nonnegative");
  const int n = n1 + n2;
  require_sites(n, 3);
  const int nv = var_count(n);

  auto images = LaurentQ::identity_images(nv);
  for (int i = 1; i <= n; ++i) {
    images[z_slot(i)].second[z_slot(i)] = -1;               // z_i -> 1/z_i
    if (i > n1) images[z_slot(i)].second[kTSlot] = -6;      // extra q^{-3} = t^{-6}
  }
  const StateQ bra = substitute_state(qkz_state(n), images);

  std::vector<int> left_slots(var_count(n1));
  for (int v = 0; v < var_count(n1); ++v) left_slots[v] = v;
  std::vector<int> right_slots(var_count(n2));
  right_slots[kTSlot] = kTSlot;
  right_slots[kBetaSlot] = kBetaSlot;
  for (int i = 1; i <= n2; ++i) right_slots[z_slot(i)] = z_slot(n1 + i);

  const StateQ left = qkz_state(n1);
  const StateQ right = qkz_state(n2);
  LaurentQ acc = LaurentQ::zero(nv);
  for (std::size_t w1 = 0; w1 < left.size(); ++w1) {
    if (left[w1].is_zero()) continue;
    const LaurentQ left_embedded = left[w1].embedded(nv, left_slots);
    for (std::size_t w2 = 0; w2 < right.size(); ++w2) {
      if (right[w2].is_zero()) continue;
      const std::size_t w = (w1 << n2) | w2;
      if (bra[w].is_zero()) continue;
      acc += bra[w] * left_embedded * right[w2].embedded(nv, right_slots);
    }
  }
  return acc;
}

}  // namespace xxz
