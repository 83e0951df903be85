#include "zakframe/zak.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zakframe/linalg.hpp"

namespace zakframe {

namespace {

void require_group_function(const InductionSetting& s, const GroupFunction& f, const char* what) {
  if (static_cast<int>(f.size()) != s.group_order())
    throw InvalidArgument(std::string(what) + ": function has " + std::to_string(f.size()) +
                          " values, group has order " + std::to_string(s.group_order()));
}

}  // namespace

GroupFunction GroupFunction::delta(std::size_t n, std::size_t at) {
  if (at >= n) throw InvalidArgument("delta: position out of range");
  GroupFunction f(n);
  f[at] = 1.0;
  return f;
}

GroupFunction GroupFunction::constant(std::size_t n, cplx c) { return GroupFunction(CVector(n, c)); }

double GroupFunction::norm() const { return linalg::norm(values_); }

cplx inner(const GroupFunction& f, const GroupFunction& g) { return linalg::inner(f.span(), g.span()); }

GroupFunction pointwise_product(const GroupFunction& f, const GroupFunction& g) {
  if (f.size() != g.size()) throw InvalidArgument("pointwise_product: size mismatch");
  GroupFunction out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

GroupFunction conjugate(const GroupFunction& f) {
  GroupFunction out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::conj(f[i]);
  return out;
}

double max_abs_diff(const GroupFunction& f, const GroupFunction& g) {
  if (f.size() != g.size()) throw InvalidArgument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

ZakArray zak_right(const InductionSetting& s, const GroupFunction& f) {
  require_group_function(s, f, "zak_right");
  const int nh = s.subgroup_order();
  const int nr = s.transversal_size();
  ZakArray z;
  z.reps = s.transversal.reps();
  z.characters.reserve(nh);
  for (int a = 0; a < nh; ++a) z.characters.push_back(s.subgroup.subgroup().tuple(a));
  z.data = CMatrix(nh, nr);

  for (int j = 0; j < nr; ++j) {
    CVector fx(nh);  // f_x(h) = f(x h)
    for (int h = 0; h < nh; ++h) fx[h] = f[s.group.mul(s.transversal.rep(j), s.subgroup.into(h))];
    for (int a = 0; a < nh; ++a) {
      cplx acc = 0.0;
      for (int h = 0; h < nh; ++h) acc += fx[h] * s.characters(a, h);
      z.data(a, j) = acc;
    }
  }
  return z;
}

CMatrix zak_left(const InductionSetting& s, const GroupFunction& f) {
  require_group_function(s, f, "zak_left");
  const int nh = s.subgroup_order();
  const int n = s.group_order();
  CMatrix out(nh, n);
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < nh; ++a) {
      cplx acc = 0.0;
      for (int h = 0; h < nh; ++h) acc += f[s.group.mul(s.subgroup.into(h), x)] * std::conj(s.characters(a, h));
      out(a, x) = acc;
    }
  return out;
}

GroupFunction zak_inverse(const InductionSetting& s, const ZakArray& z) {
  const int nh = s.subgroup_order();
  const int nr = s.transversal_size();
  if (z.num_characters() != nh || z.fiber_size() != nr)
    throw InvalidArgument("zak_inverse: array is " + std::to_string(z.num_characters()) + " x " +
                          std::to_string(z.fiber_size()) + ", setting needs " + std::to_string(nh) + " x " +
                          std::to_string(nr));
  GroupFunction f(s.group_order());
  const double w = 1.0 / nh;
  for (int j = 0; j < nr; ++j)
    for (int h = 0; h < nh; ++h) {
      cplx acc = 0.0;
      for (int a = 0; a < nh; ++a) acc += z.data(a, j) * std::conj(s.characters(a, h));
      f[s.group.mul(s.transversal.rep(j), s.subgroup.into(h))] = w * acc;
    }
  return f;
}

cplx weighted_inner(const ZakArray& a, const ZakArray& b) {
  if (a.data.rows() != b.data.rows() || a.data.cols() != b.data.cols())
    throw InvalidArgument("weighted_inner: shape mismatch");
  cplx acc = 0.0;
  for (std::size_t r = 0; r < a.data.rows(); ++r) acc += linalg::inner(a.data.row(r), b.data.row(r));
  return acc / static_cast<double>(a.data.rows());
}

double weighted_norm(const ZakArray& a) { return std::sqrt(weighted_inner(a, a).real()); }

CVector extend_fiber(const InductionSetting& s, int alpha, std::span<const cplx> fiber) {
  if (static_cast<int>(fiber.size()) != s.transversal_size()) throw InvalidArgument("extend_fiber: wrong fiber size");
  CVector out(s.group_order());
  for (int x = 0; x < s.group_order(); ++x) {
    const Transversal::Factor c = s.transversal.coset_of(x);
    out[x] = std::conj(s.characters(alpha, c.h)) * fiber[c.rep];
  }
  return out;
}

CVector restrict_fiber(const InductionSetting& s, std::span<const cplx> on_group) {
  if (static_cast<int>(on_group.size()) != s.group_order()) throw InvalidArgument("restrict_fiber: wrong size");
  CVector out(s.transversal_size());
  for (int j = 0; j < s.transversal_size(); ++j) out[j] = on_group[s.transversal.rep(j)];
  return out;
}

double ProductIdentityResidual::max() const { return std::max({product, conjugation, modulus_squared}); }

ProductIdentityResidual zak_product_identity(const InductionSetting& s, const GroupFunction& f,
                                             const GroupFunction& g) {
  require_group_function(s, f, "zak_product_identity");
  require_group_function(s, g, "zak_product_identity");
  const AbelianGroup& hg = s.subgroup.subgroup();
  const int nh = s.subgroup_order();
  const int n = s.group_order();

  auto full = [&](const ZakArray& z) {
    std::vector<CVector> fibers(nh);
    for (int a = 0; a < nh; ++a) fibers[a] = extend_fiber(s, a, z.fiber(a));
    return fibers;
  };
  const auto zf = full(zak_right(s, f));
  const auto zg = full(zak_right(s, g));
  const auto zfg = full(zak_right(s, pointwise_product(f, g)));
  const auto zfbar = full(zak_right(s, conjugate(f)));
  GroupFunction abs2(n);
  for (int x = 0; x < n; ++x) abs2[x] = std::norm(f[x]);
  const auto zabs2 = full(zak_right(s, abs2));

  // diff[a][b] indexes beta^-1 alpha, shifted[a][b] indexes alpha^-1 beta.
  std::vector<std::vector<int>> diff(nh, std::vector<int>(nh)), shifted(nh, std::vector<int>(nh));
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      diff[a][b] = hg.sub(a, b);
      shifted[a][b] = hg.sub(b, a);
    }

  ProductIdentityResidual r;
  const double w = 1.0 / nh;
  for (int a = 0; a < nh; ++a) {
    const int a_inv = hg.neg(a);
    for (int x = 0; x < n; ++x) {
      cplx prod = 0.0, sq = 0.0;
      for (int b = 0; b < nh; ++b) {
        prod += zf[b][x] * zg[diff[a][b]][x];
        sq += zf[b][x] * std::conj(zf[shifted[a][b]][x]);
      }
      r.product = std::max(r.product, std::abs(zfg[a][x] - w * prod));
      r.modulus_squared = std::max(r.modulus_squared, std::abs(zabs2[a][x] - w * sq));
      r.conjugation = std::max(r.conjugation, std::abs(zfbar[a][x] - std::conj(zf[a_inv][x])));
    }
  }
  return r;
}

}  // namespace zakframe
