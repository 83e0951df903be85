#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zakframe/constructions.hpp"
#include "zakframe/linalg.hpp"
#include "zakframe/repn.hpp"

using namespace zakframe;

TEST_CASE("monomial matrix basics") {
  const MonomialMatrix m({1, 2, 0}, {1.0, cplx(0, 1), -1.0});
  const CVector v{1.0, 2.0, 3.0};
  const CVector mv = m.apply(v);
  CHECK(mv[0] == cplx(2, 0));
  CHECK(mv[1] == cplx(0, 3));
  CHECK(mv[2] == cplx(-1, 0));
  const CMatrix dense = m.dense();
  CHECK(dense(1, 2) == cplx(0, 1));
  CHECK(linalg::max_abs_diff((m * m).dense(), linalg::multiply(dense, dense)) < 1e-15);
  CHECK(linalg::max_abs_diff((m * m.adjoint()).dense(), CMatrix::identity(3)) < 1e-15);
  CHECK_THROWS_AS(MonomialMatrix({0, 0, 1}, {1.0, 1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(MonomialMatrix({0, 1}, {1.0}), InvalidArgument);
}

TEST_CASE("induced matrices of the Heisenberg group") {
  for (int d : {2, 3}) {
    const HeisenbergContext h = build_heisenberg(d);
    const InductionSetting& s = h.setting;
    CHECK(linalg::max_abs_diff(induced_rep_matrix(s, h.alpha_01, s.group.identity()).dense(), CMatrix::identity(d)) == 0.0);
    // pi(s) = omega I.
    const CMatrix ps = induced_rep_matrix(s, h.alpha_01, h.s()).dense();
    const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) CHECK(std::abs(ps(i, j) - (i == j ? omega : 0.0)) < 1e-15);
  }
  const HeisenbergContext h3 = build_heisenberg(3);
  const MonomialMatrix t = induced_rep_matrix(h3.setting, h3.alpha_01, h3.t());
  for (int j = 0; j < 3; ++j) {
    CHECK(t.perm()[j] == (j + 2) % 3);
    CHECK(t.phases()[j] == cplx(1, 0));
  }
}

TEST_CASE("induced matrices match the materialized F_alpha model") {
  std::vector<InductionSetting> settings{build_heisenberg(3).setting, build_affine(7).setting};
  for (const InductionSetting& s : settings)
    for (int alpha = 0; alpha < s.num_characters(); ++alpha)
      for (int x = 0; x < s.group_order(); ++x)
        CHECK(oracle::max_diff(induced_rep_matrix(s, alpha, x).dense(), oracle::induced_dense(s, alpha, x)) < 1e-13);
}

TEST_CASE("induced representation is a unitary homomorphism") {
  std::mt19937_64 rng(11);
  const InductionSetting s = build_affine(11).setting;
  std::uniform_int_distribution<int> pick(0, s.group_order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const int alpha = pick(rng) % s.num_characters();
    const int x = pick(rng), y = pick(rng);
    const MonomialMatrix mx = induced_rep_matrix(s, alpha, x);
    CHECK(linalg::max_abs_diff((mx * induced_rep_matrix(s, alpha, y)).dense(),
                               induced_rep_matrix(s, alpha, s.group.mul(x, y)).dense()) <= 1e-13);
    CHECK(mx.phase_defect() <= 1e-15);
  }
}

TEST_CASE("regular actions") {
  const HeisenbergContext h = build_heisenberg(3);
  const InductionSetting& s = h.setting;
  std::mt19937_64 rng(12);
  const GroupFunction f(oracle::random_vector(rng, 27));
  CHECK(max_abs_diff(regular_action(s, Side::left, s.group.identity(), f), f) == 0.0);
  for (int x = 0; x < 27; ++x) CHECK(regular_action(s, Side::left, x, f).norm() == doctest::Approx(f.norm()));
  // R_h delta_{x0} = delta_{x0 h^-1}
  const int x0 = h.element(1, 2, 1);
  const GroupFunction moved = regular_action(s, Side::right, h.r(), GroupFunction::delta(27, x0));
  CHECK(moved[s.group.mul(x0, s.group.inv(h.r()))] == cplx(1, 0));
  CHECK(moved.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(regular_action(s, Side::right, h.t(), f), InvalidArgument);
}

TEST_CASE("positive-type function") {
  std::mt19937_64 rng(13);
  const HeisenbergContext h = build_heisenberg(3);
  const InductionSetting& s = h.setting;
  const CVector f = oracle::random_unit_vector(rng, 3);
  const PositiveTypeFunction g = positive_type(s, h.alpha_01, f);
  CHECK(std::abs(g.values[s.group.identity()] - 1.0) < 1e-15);
  CHECK_FALSE(g.normalized);
  for (int x = 0; x < 27; ++x) {
    CHECK(std::abs(g.values[s.group.inv(x)] - std::conj(g.values[x])) < 1e-14);
    CHECK(std::abs(g.values[x]) <= 1.0 + 1e-14);
    // g(x) = <f, pi(x) f> through the F_alpha model.
    CHECK(std::abs(g.values[x] - oracle::dot(f, oracle::induced_apply(s, h.alpha_01, x, f))) < 1e-14);
  }
  REQUIRE(g.closed_form.has_value());
  CHECK(g.closed_form_residual <= 1e-12);

  // (Z_r g)(alpha_{a,c})(t^h) = d^2 f(t^{h-a}) conj f(t^{-a}) delta_{c,1}.
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c)
      for (int j = 0; j < 3; ++j) {
        const cplx expect = c == 1 ? 9.0 * f[((j - a) % 3 + 3) % 3] * std::conj(f[(3 - a) % 3]) : 0.0;
        CHECK(std::abs(g.zak.data(h.alpha(a, c), j) - expect) < 1e-13);
      }
}

TEST_CASE("positive-type function normalizes its input") {
  const AffineContext a = build_affine(7);
  const CVector f(3, 2.0);
  const PositiveTypeFunction g = positive_type(a.setting, a.alpha_one, f);
  CHECK(g.normalized);
  CHECK_FALSE(g.warning.empty());
  CHECK(g.input_norm == doctest::Approx(std::sqrt(12.0)));
  CHECK(std::abs(g.values[a.setting.group.identity()] - 1.0) < 1e-15);
  CHECK_THROWS_AS(positive_type(a.setting, a.alpha_one, CVector(3)), InvalidArgument);
}

TEST_CASE("closed form of the positive-type transform on affine groups") {
  const AffineContext ctx = build_affine(7);
  const CVector f(3, std::sqrt(1.0 / 3.0));
  const PositiveTypeFunction g = positive_type(ctx.setting, ctx.alpha_one, f);
  const std::vector<int> residues{1, 2, 4};
  for (const FieldElement& b : ctx.field.elements()) {
    const bool is_res = std::find(residues.begin(), residues.end(), ctx.field.index(b)) != residues.end();
    for (int j = 0; j < 3; ++j) CHECK(std::abs(g.zak.data(ctx.alpha(b), j) - (is_res ? 7.0 / 3.0 : 0.0)) < 1e-13);
  }
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const PositiveTypeFunction r = positive_type(ctx.setting, ctx.alpha_one, oracle::random_unit_vector(rng, 3));
    CHECK(r.closed_form_residual <= 1e-12);
  }
}

TEST_CASE("cyclic vectors") {
  const AffineContext a = build_affine(7);
  CHECK(is_cyclic(a.setting, a.alpha_one, CVector(3, 1.0)));
  CHECK_FALSE(is_cyclic(a.setting, a.alpha_one, CVector(3)));
  std::mt19937_64 rng(15);
  // Under the trivial character, pi(x) only permutes entries cyclically:
  // a generic vector has a full-rank circulant orbit, a constant one does not.
  const CVector f = oracle::random_vector(rng, 3);
  CHECK(is_cyclic(a.setting, 0, f));
  CHECK_FALSE(is_cyclic(a.setting, 0, CVector(3, 1.0)));
  CHECK(linalg::numerical_rank(orbit_matrix(a.setting, 0, CVector(3, 1.0)), 1e-10) == 1);

  const HeisenbergContext h = build_heisenberg(4);
  CHECK(is_cyclic(h.setting, h.alpha_01, oracle::random_vector(rng, 4)));
  CHECK_FALSE(is_cyclic(h.setting, h.alpha(0, 0), CVector(4, 1.0)));
}

TEST_CASE("irreducibility from trivial little groups") {
  const AffineContext a = build_affine(7);
  CHECK(is_irreducible_sufficient(a.setting, a.alpha_one));
  CHECK_FALSE(is_irreducible_sufficient(a.setting, 0));
  const HeisenbergContext h = build_heisenberg(2);
  CHECK(is_irreducible_sufficient(h.setting, h.alpha_01));
  CHECK_FALSE(is_irreducible_sufficient(h.setting, h.alpha(1, 0)));
}
