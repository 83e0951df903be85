#include "zakframe/sispace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zakframe/linalg.hpp"

namespace zakframe {

namespace {

constexpr double kRankTolerance = 1e-10;

std::vector<ZakArray> transforms(const InductionSetting& s, std::span<const GroupFunction> generators) {
  std::vector<ZakArray> out;
  out.reserve(generators.size());
  for (const GroupFunction& f : generators) out.push_back(zak_right(s, f));
  return out;
}

double largest_fiber_norm(const std::vector<ZakArray>& zs) {
  double m = 0.0;
  for (const ZakArray& z : zs)
    for (int a = 0; a < z.num_characters(); ++a) m = std::max(m, linalg::norm(z.fiber(a)));
  return m;
}

}  // namespace

int RangeFunction::total_dimension() const {
  int t = 0;
  for (const auto& b : bases) t += static_cast<int>(b.size());
  return t;
}

RangeFunction range_of_generators(const InductionSetting& s, std::span<const GroupFunction> generators) {
  const std::vector<ZakArray> zs = transforms(s, generators);
  const double cut = kRankTolerance * largest_fiber_norm(zs);
  RangeFunction j;
  j.fiber_dim = s.transversal_size();
  j.bases.resize(s.num_characters());
  for (int a = 0; a < s.num_characters(); ++a) {
    std::vector<CVector> fibers;
    for (const ZakArray& z : zs) fibers.emplace_back(z.fiber(a).begin(), z.fiber(a).end());
    j.bases[a] = linalg::orthonormalize(fibers, cut);
  }
  return j;
}

double membership_residual(const InductionSetting& s, const GroupFunction& f, const RangeFunction& j) {
  const ZakArray z = zak_right(s, f);
  if (static_cast<int>(j.bases.size()) != z.num_characters() || j.fiber_dim != z.fiber_size())
    throw InvalidArgument("membership: range function does not match the setting");
  const double scale = largest_fiber_norm({z});
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int a = 0; a < z.num_characters(); ++a)
    worst = std::max(worst, linalg::projection_residual(z.fiber(a), j.bases[a]));
  return worst / scale;
}

bool membership(const InductionSetting& s, const GroupFunction& f, const RangeFunction& j, double tol) {
  return membership_residual(s, f, j) <= tol;
}

FiberBounds fiber_frame_bounds(const InductionSetting& s, std::span<const GroupFunction> generators) {
  if (generators.empty()) throw InvalidArgument("fiber_frame_bounds: empty generator system");
  const std::vector<ZakArray> zs = transforms(s, generators);
  const double scale = largest_fiber_norm(zs);
  if (scale == 0.0) throw InvalidArgument("zero system");
  // Gram eigenvalues carry squared units: cut relative to the squared fiber scale.
  const double eig_cut = kRankTolerance * scale * scale;

  FiberBounds out;
  out.per_fiber.resize(s.num_characters());
  out.dimensions.assign(s.num_characters(), 0);
  out.lower = std::numeric_limits<double>::infinity();
  out.upper = 0.0;
  for (int a = 0; a < s.num_characters(); ++a) {
    std::vector<CVector> fibers;
    for (const ZakArray& z : zs) fibers.emplace_back(z.fiber(a).begin(), z.fiber(a).end());
    // The nonzero spectrum of the frame operator on J(alpha) equals that of the n x n Gram matrix.
    const std::vector<double> eig = linalg::hermitian_eigenvalues(linalg::gram_matrix(fibers));
    std::vector<double> nonzero;
    for (double e : eig)
      if (e > eig_cut) nonzero.push_back(e);
    out.dimensions[a] = static_cast<int>(nonzero.size());
    if (nonzero.empty()) continue;
    out.per_fiber[a] = std::make_pair(nonzero.front(), nonzero.back());
    out.lower = std::min(out.lower, nonzero.front());
    out.upper = std::max(out.upper, nonzero.back());
  }
  return out;
}

}  // namespace zakframe
