#include <doctest.h>

#include <random>

#include "eigen_oracle.hpp"
#include "oracles.hpp"
#include "zakframe/constructions.hpp"
#include "zakframe/linalg.hpp"
#include "zakframe/sispace.hpp"

using namespace zakframe;

namespace {

GroupFunction right_shift(const InductionSetting& s, const GroupFunction& f, int h) {
  GroupFunction out(f.size());
  for (int z = 0; z < s.group_order(); ++z) out[z] = f[s.group.mul(z, s.subgroup.into(h))];
  return out;
}

// E(A) as plain vectors in L^2(G).
std::vector<CVector> shift_system(const InductionSetting& s, const std::vector<GroupFunction>& gens) {
  std::vector<CVector> out;
  for (const GroupFunction& f : gens)
    for (int h = 0; h < s.subgroup_order(); ++h) out.push_back(right_shift(s, f, h).values());
  return out;
}

// Projection matrix onto span(basis).
CMatrix projector(const std::vector<CVector>& basis, int n) {
  CMatrix p(n, n);
  for (const CVector& b : basis)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) += b[i] * std::conj(b[j]);
  return p;
}

}  // namespace

TEST_CASE("range function of the identity delta") {
  for (const InductionSetting& s : {build_heisenberg(2).setting, build_affine(7).setting}) {
    const std::vector<GroupFunction> gens{GroupFunction::delta(s.group_order(), s.group.identity())};
    const RangeFunction j = range_of_generators(s, gens);
    for (int a = 0; a < s.num_characters(); ++a) {
      REQUIRE(j.dimension(a) == 1);
      CHECK(std::abs(std::abs(j.bases[a][0][0]) - 1.0) < 1e-15);
    }
    const FiberBounds fb = fiber_frame_bounds(s, gens);
    CHECK(fb.lower == doctest::Approx(1.0));
    CHECK(fb.upper == doctest::Approx(1.0));
  }
}

TEST_CASE("range function of the constant function on the affine group") {
  const AffineContext ctx = build_affine(7);
  const std::vector<GroupFunction> gens{GroupFunction::constant(21, 1.0)};
  const RangeFunction j = range_of_generators(ctx.setting, gens);
  for (const FieldElement& b : ctx.field.elements()) CHECK(j.dimension(ctx.alpha(b)) == (ctx.field.is_zero(b) ? 1 : 0));
  CHECK(j.total_dimension() == 1);
  const FiberBounds fb = fiber_frame_bounds(ctx.setting, gens);
  CHECK(fb.lower == doctest::Approx(147.0).epsilon(1e-13));
  CHECK(fb.upper == doctest::Approx(147.0).epsilon(1e-13));
  int nonzero = 0;
  for (const auto& p : fb.per_fiber) nonzero += p.has_value();
  CHECK(nonzero == 1);
}

TEST_CASE("single generator spans at most a line per fiber") {
  std::mt19937_64 rng(31);
  const InductionSetting s = build_heisenberg(3).setting;
  const RangeFunction j = range_of_generators(s, std::vector<GroupFunction>{GroupFunction(oracle::random_vector(rng, 27))});
  for (int a = 0; a < 9; ++a) CHECK(j.dimension(a) <= 1);
  for (const auto& basis : j.bases)
    for (const CVector& v : basis) CHECK(linalg::norm(v) == doctest::Approx(1.0));
}

TEST_CASE("membership") {
  std::mt19937_64 rng(32);
  const InductionSetting s = build_heisenberg(3).setting;
  const std::vector<GroupFunction> gens{GroupFunction(oracle::random_vector(rng, 27)),
                                        GroupFunction(oracle::random_vector(rng, 27))};
  const RangeFunction j = range_of_generators(s, gens);
  CHECK(membership(s, gens[0], j));
  for (int h = 0; h < 9; ++h) CHECK(membership(s, right_shift(s, gens[1], h), j));

  // A random combination of shifts lies in S(A).
  const std::vector<CVector> system = shift_system(s, gens);
  GroupFunction combo(27);
  for (const CVector& v : system) {
    const cplx c = oracle::random_vector(rng, 1)[0];
    for (int x = 0; x < 27; ++x) combo[x] += c * v[x];
  }
  CHECK(membership(s, combo, j));

  // Remove the S(A) component from a random function: what is left is orthogonal to S(A).
  const std::vector<CVector> on = linalg::orthonormalize(system, 1e-10);
  CVector perp = oracle::random_vector(rng, 27);
  for (const CVector& b : on) {
    const cplx c = linalg::inner(perp, b);
    for (int x = 0; x < 27; ++x) perp[x] -= c * b[x];
  }
  CHECK_FALSE(membership(s, GroupFunction(perp), j));
  CHECK(membership_residual(s, GroupFunction(perp), j) > 0.1);
  CHECK(membership(s, GroupFunction(27), j));
}

TEST_CASE("range functions round-trip through orthonormal spanning sets") {
  std::mt19937_64 rng(33);
  const InductionSetting s = build_heisenberg(3).setting;
  const std::vector<GroupFunction> gens{GroupFunction(oracle::random_vector(rng, 27)),
                                        GroupFunction(oracle::random_vector(rng, 27))};
  const RangeFunction j = range_of_generators(s, gens);
  std::vector<GroupFunction> on;
  for (const CVector& v : linalg::orthonormalize(shift_system(s, gens), 1e-10)) on.emplace_back(v);
  CHECK(static_cast<int>(on.size()) == j.total_dimension());
  const RangeFunction j2 = range_of_generators(s, on);
  for (int a = 0; a < 9; ++a) {
    REQUIRE(j2.dimension(a) == j.dimension(a));
    CHECK(linalg::max_abs_diff(projector(j.bases[a], 3), projector(j2.bases[a], 3)) <= 1e-10);
  }
}

TEST_CASE("fiber bounds equal the direct Gram bounds of the shift system") {
  std::mt19937_64 rng(34);
  for (int d : {2, 3}) {
    const InductionSetting s = build_heisenberg(d).setting;
    for (int count : {1, 2, 3}) {
      std::vector<GroupFunction> gens;
      for (int c = 0; c < count; ++c) gens.emplace_back(oracle::random_unit_vector(rng, s.group_order()));
      const FiberBounds fb = fiber_frame_bounds(s, gens);
      const std::vector<double> eig = oracle::hermitian_eigenvalues(linalg::gram_matrix(shift_system(s, gens)));
      double lo = eig.back();
      for (double e : eig)
        if (e > 1e-10 * eig.back()) lo = std::min(lo, e);
      CHECK(std::abs(fb.lower - lo) <= 1e-10);
      CHECK(std::abs(fb.upper - eig.back()) <= 1e-10);
    }
  }
}

TEST_CASE("single-generator fiber bounds are fiber energies") {
  std::mt19937_64 rng(35);
  const InductionSetting s = build_affine(7).setting;
  const GroupFunction f(oracle::random_vector(rng, 21));
  const FiberBounds fb = fiber_frame_bounds(s, std::vector<GroupFunction>{f});
  const ZakArray z = zak_right(s, f);
  for (int a = 0; a < 7; ++a) {
    REQUIRE(fb.per_fiber[a].has_value());
    CHECK(fb.per_fiber[a]->first == doctest::Approx(linalg::norm_sq(z.fiber(a))).epsilon(1e-12));
  }
}

TEST_CASE("zero system") {
  const InductionSetting s = build_heisenberg(2).setting;
  CHECK_THROWS_WITH_AS(fiber_frame_bounds(s, std::vector<GroupFunction>{GroupFunction(8)}), "zero system",
                       InvalidArgument);
  CHECK_THROWS_AS(fiber_frame_bounds(s, std::vector<GroupFunction>{}), InvalidArgument);
}
