#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xxzlbf/vertex_model.hpp"

using namespace xxz;

TEST_CASE("monomial exponent helper and bracket") {
  const auto e = mono(2, 3, -1, {{2, 4}});
  CHECK(e == LaurentQ::Exponents{3, -1, 0, 4});
  CHECK_THROWS_AS(mono(2, 0, 0, {{3, 1}}), ArgumentError);

  const LaurentQ br = vm_bracket(1, mono(1, 1, 0));  // [t] = t - 1/t
  CHECK(br.term_count() == 2);
  CHECK(br.coeff(mono(1, 1, 0)) == Rational(1));
  CHECK(br.coeff(mono(1, -1, 0)) == Rational(-1));
  // At t = 1 every bracket of a pure power of t vanishes.
  CHECK(br.evaluate({Rational(1), Rational(5), Rational(3)}) == Rational(0));
}

TEST_CASE("braid matrix is the identity at unit argument") {
  // Argument m = 1: the numerator must be den * Id since [1] = 0, [q 1] = [q].
  const LocalOp r1 = braid_r(0, mono(0, 0, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(r1.num(i, j) == (i == j ? r1.den : LaurentQ::zero(var_count(0))));

  // Same via substitution z1 := 1 in R(z1).
  const LocalOp rz = braid_r(1, mono(1, 0, 0, {{1, 1}}));
  const auto at_one = [](const LaurentQ& p) {
    return p.substituted_var(z_slot(1), Rational(1), mono(1, 0, 0));
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(at_one(rz.num(i, j)) == (i == j ? at_one(rz.den) : LaurentQ::zero(var_count(1))));
}

TEST_CASE("braid matrix maps the singlet to the expected multiple") {
  // R(q^{-1}) on s = (0, 1, -1, 0) acts as multiplication by 2[q]/[q^2].
  const LocalOp r = braid_r(0, mono(0, -2, 0));
  const LaurentQ factor = vm_bracket(0, mono(0, 2, 0)) * LaurentQ(2);  // 2[q]
  CHECK(r.den == vm_bracket(0, mono(0, 4, 0)));                        // [q^2]
  CHECK(r.num(1, 1) - r.num(1, 2) == factor);
  CHECK(r.num(2, 2) - r.num(2, 1) == factor);
  CHECK(r.num(0, 1).is_zero());
}

TEST_CASE("boundary matrix diagonal") {
  const LocalOp k = boundary_k(1, mono(1, 0, 0, {{1, 1}}), mono(1, 0, 1));
  CHECK(k.den == vm_bracket(1, mono(1, 0, 1, {{1, -1}})));   // [beta/z1]
  CHECK(k.num(0, 0) == k.den);
  CHECK(k.num(1, 1) == vm_bracket(1, mono(1, 0, 1, {{1, 1}})));  // [beta z1]
  CHECK(k.num(0, 1).is_zero());
  CHECK(k.num(1, 0).is_zero());
}

TEST_CASE("boundary qKZ vectors on one and two sites") {
  const StateQ one = qkz_state(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == LaurentQ::constant(var_count(1), Rational(1)));
  CHECK(one[1].is_zero());

  const StateQ two = qkz_state(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0b01] == -vm_bracket(2, mono(2, 2, 1, {{2, 1}})));  // -[q beta z2]
  CHECK(two[0b10] == vm_bracket(2, mono(2, 0, 1, {{1, 1}})));   // [beta z1]
  CHECK(two[0b00].is_zero());
  CHECK(two[0b11].is_zero());

  CHECK_THROWS_AS(qkz_state(4), ArgumentError);
}

TEST_CASE("singlet insertion places |ud> - |du> at the requested bond") {
  const StateQ empty = qkz_state(0);
  const StateQ pair = singlet_insert(empty, 1, 2);
  REQUIRE(pair.size() == 4);
  const LaurentQ one = LaurentQ::constant(var_count(0), Rational(1));
  CHECK(pair[0b01] == one);
  CHECK(pair[0b10] == -one);
  CHECK(pair[0b00].is_zero());
  CHECK(pair[0b11].is_zero());

  // Insert around a single occupied site (spin down at the remaining site).
  StateQ site(2, LaurentQ::zero(2));
  site[1] = one;
  const StateQ left = singlet_insert(site, 1, 3);   // singlet on sites (1,2)
  CHECK(left[0b011] == one);
  CHECK(left[0b101] == -one);
  const StateQ right = singlet_insert(site, 2, 3);  // singlet on sites (2,3)
  CHECK(right[0b101] == one);
  CHECK(right[0b110] == -one);

  CHECK_THROWS_AS(singlet_insert(site, 3, 3), ArgumentError);
  CHECK_THROWS_AS(singlet_insert(site, 1, 2), ArgumentError);
}

TEST_CASE("transpose pairing is a symmetric bilinear form without conjugation") {
  const StateQ a = qkz_state(2);
  StateQ b(4, LaurentQ::zero(var_count(2)));
  b[1] = vm_bracket(2, mono(2, 1, 0, {{1, 2}}));
  b[2] = LaurentQ::constant(var_count(2), Rational(-3));
  StateQ c(4, LaurentQ::zero(var_count(2)));
  c[1] = LaurentQ::var_pow(var_count(2), kBetaSlot, 2);
  c[2] = vm_bracket(2, mono(2, 0, 0, {{2, -1}}));

  CHECK(transpose_pairing(a, b) == transpose_pairing(b, a));
  StateQ b_plus_c(4, LaurentQ::zero(var_count(2)));
  for (int w = 0; w < 4; ++w) b_plus_c[w] = b[w] + c[w];
  CHECK(transpose_pairing(a, b_plus_c) ==
        transpose_pairing(a, b) + transpose_pairing(a, c));
  CHECK(transpose_pairing(a, b) == a[1] * b[1] + a[2] * b[2]);
}

TEST_CASE("state substitution commutes with evaluation") {
  const StateQ two = qkz_state(2);
  // z1 := 2 z2 as a simultaneous substitution.
  auto images = LaurentQ::identity_images(var_count(2));
  images[z_slot(1)] = {Rational(2), mono(2, 0, 0, {{2, 1}})};
  const StateQ shifted = substitute_state(two, images);

  const std::vector<Rational> point = {Rational(3, 2), Rational(5), Rational(7, 3),
                                       Rational(2, 7)};
  std::vector<Rational> moved = point;
  moved[z_slot(1)] = 2 * point[z_slot(2)];
  for (std::size_t w = 0; w < two.size(); ++w)
    CHECK(shifted[w].evaluate(point) == two[w].evaluate(moved));
}

TEST_CASE("two-block overlaps: trivial cases and the hand-expanded two-site case") {
  CHECK(block_overlap(0, 0) == LaurentQ::constant(var_count(0), Rational(1)));
  CHECK(block_overlap(0, 1) == LaurentQ::constant(var_count(1), Rational(1)));
  CHECK(block_overlap(1, 0) == LaurentQ::constant(var_count(1), Rational(1)));
  CHECK(block_overlap(1, 1).is_zero());

  // Omega_{2,0} = [beta/z1][beta z1] + [q beta/z2][q beta z2].
  const LaurentQ expected =
      vm_bracket(2, mono(2, 0, 1, {{1, -1}})) * vm_bracket(2, mono(2, 0, 1, {{1, 1}})) +
      vm_bracket(2, mono(2, 2, 1, {{2, -1}})) * vm_bracket(2, mono(2, 2, 1, {{2, 1}}));
  CHECK(block_overlap(2, 0) == expected);
  CHECK_THROWS_AS(block_overlap(-1, 2), ArgumentError);
}

TEST_CASE("operator embedding acts on the chosen sites only") {
  // Diagonal one-site operator diag(0, [t]) on site 1 of a 2-site chain.
  const int nv = var_count(0);
  Mat<LaurentQ> op = Mat<LaurentQ>::Constant(2, 2, LaurentQ::zero(nv));
  op(1, 1) = vm_bracket(0, mono(0, 1, 0));
  const Mat<LaurentQ> full = embed_one_site(op, 1, 2);
  REQUIRE(full.rows() == 4);
  for (int w = 0; w < 4; ++w)
    for (int v = 0; v < 4; ++v) {
      const bool site1_down = (w & 0b10) != 0;
      const LaurentQ want =
          (w == v && site1_down) ? op(1, 1) : LaurentQ::zero(nv);
      CHECK(full(w, v) == want);
    }

  StateQ basis_dd(4, LaurentQ::zero(nv));
  basis_dd[0b11] = LaurentQ::constant(nv, Rational(1));
  const StateQ image = apply_operator(full, basis_dd);
  CHECK(image[0b11] == op(1, 1));
}
