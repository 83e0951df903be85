#include "zakframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zakframe/linalg.hpp"
#include "zakframe/repn.hpp"

namespace zakframe {

double welch_bound_sq(int n, int d) {
  if (n <= d) return 0.0;
  return static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1));
}

FrameReport frame_report(const std::vector<CVector>& vectors, double tol) {
  if (vectors.empty()) throw InvalidArgument("frame_report: no vectors");
  FrameReport r;
  r.n = static_cast<int>(vectors.size());
  r.d = static_cast<int>(vectors.front().size());
  if (r.d == 0) throw InvalidArgument("frame_report: zero-dimensional vectors");
  r.unit_norm = true;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (static_cast<int>(vectors[j].size()) != r.d) throw InvalidArgument("frame_report: inconsistent dimension");
    const double n2 = linalg::norm_sq(vectors[j]);
    if (n2 == 0.0) throw InvalidArgument("frame_report: zero vector at position " + std::to_string(j));
    if (std::abs(n2 - 1.0) > tol) r.unit_norm = false;
  }

  r.gram = linalg::gram_matrix(vectors);
  const std::vector<double> eig = linalg::hermitian_eigenvalues(linalg::frame_operator(vectors, r.d));
  r.lower_bound = std::max(0.0, eig.front());
  r.upper_bound = eig.back();

  if (r.n > 1) {
    r.coherence_sq_min = std::numeric_limits<double>::infinity();
    r.coherence_sq_max = 0.0;
    for (int i = 0; i < r.n; ++i)
      for (int j = i + 1; j < r.n; ++j) {
        const double c = std::norm(r.gram(i, j));
        r.coherence_sq_min = std::min(r.coherence_sq_min, c);
        r.coherence_sq_max = std::max(r.coherence_sq_max, c);
      }
  }
  r.welch_sq = welch_bound_sq(r.n, r.d);

  r.tight = r.upper_bound - r.lower_bound <= tol * r.upper_bound;
  r.equiangular = r.unit_norm && (r.n < 2 || r.coherence_sq_max - r.coherence_sq_min <= tol);
  r.spanning = r.lower_bound > tol * r.upper_bound;
  r.etf = r.tight && r.equiangular && r.spanning;
  return r;
}

namespace {

std::vector<double> abs_sq_values(const GroupFunction& g) {
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = std::norm(g[i]);
  return out;
}

std::vector<int> stabilizer_from(const InductionSetting& s, const std::vector<double>& g2, double tol) {
  std::vector<int> l;
  std::vector<bool> in(g2.size(), false);
  for (std::size_t x = 0; x < g2.size(); ++x)
    if (g2[x] >= 1.0 - tol) {
      l.push_back(static_cast<int>(x));
      in[x] = true;
    }
  if (!in[s.group.identity()]) throw ConsistencyError("projective stabilizer misses the identity");
  for (int a : l)
    for (int b : l)
      if (!in[s.group.mul(a, b)])
        throw ConsistencyError("projective stabilizer is not closed under multiplication; tolerance mis-set?");
  return l;
}

// Least element of every left coset x L, in increasing order.
std::vector<int> coset_representatives(const InductionSetting& s, const std::vector<int>& l) {
  std::vector<bool> covered(s.group_order(), false);
  std::vector<int> reps;
  for (int x = 0; x < s.group_order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int y : l) covered[s.group.mul(x, y)] = true;
  }
  return reps;
}

CVector normalized_copy(std::span<const cplx> f) {
  const double nf = linalg::norm(f);
  if (nf == 0.0) throw InvalidArgument("zero fiducial");
  CVector out(f.begin(), f.end());
  for (cplx& z : out) z /= nf;
  return out;
}

}  // namespace

std::vector<int> projective_stabilizer(const InductionSetting& s, int alpha, std::span<const cplx> f, double tol) {
  const PositiveTypeFunction g = positive_type(s, alpha, f);
  return stabilizer_from(s, abs_sq_values(g.values), tol);
}

ProjectiveOrbit projective_reduction(const InductionSetting& s, int alpha, std::span<const cplx> f, double tol) {
  ProjectiveOrbit orbit;
  orbit.alpha = alpha;
  orbit.fiducial = normalized_copy(f);
  orbit.stabilizer = projective_stabilizer(s, alpha, orbit.fiducial, tol);
  orbit.representatives = coset_representatives(s, orbit.stabilizer);
  for (int x : orbit.representatives) orbit.vectors.push_back(orbit_vector(s, alpha, x, orbit.fiducial));
  return orbit;
}

EtfCriterion etf_criterion(const InductionSetting& s, int alpha, std::span<const cplx> f, double tol) {
  EtfCriterion r;
  const PositiveTypeFunction g = positive_type(s, alpha, f);
  r.g_abs_sq = abs_sq_values(g.values);
  const std::vector<int> l = stabilizer_from(s, r.g_abs_sq, tol);
  const int n = s.group_order();
  r.stabilizer_size = static_cast<int>(l.size());

  const std::vector<int> reps = coset_representatives(s, l);
  r.reduction_size = static_cast<int>(reps.size());
  for (int x : reps) {
    double lo = r.g_abs_sq[s.group.mul(x, l.front())], hi = lo;
    for (int y : l) {
      const double v = r.g_abs_sq[s.group.mul(x, y)];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    r.coset_spread = std::max(r.coset_spread, hi - lo);
  }

  std::vector<CVector> vectors;
  for (int x : reps) vectors.push_back(orbit_vector(s, alpha, x, g.fiducial));
  r.frame = frame_report(vectors, tol);
  r.cyclic = is_cyclic(s, alpha, g.fiducial);

  if (r.stabilizer_size == n) {
    r.degenerate = true;
    r.note = "degenerate: single line";
    r.etf = r.frame.etf;
    r.agree = true;
    return r;
  }

  std::vector<bool> in_l(n, false);
  for (int x : l) in_l[x] = true;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (in_l[x]) continue;
    lo = std::min(lo, r.g_abs_sq[x]);
    hi = std::max(hi, r.g_abs_sq[x]);
    sum += r.g_abs_sq[x];
    ++count;
  }
  r.c_observed = sum / count;
  r.two_valued = hi - lo <= tol;
  r.equiangular = r.two_valued && std::abs(r.c_observed - 1.0) > tol;
  r.c_expected = static_cast<double>(s.subgroup_order() - r.stabilizer_size) / (n - r.stabilizer_size);
  r.etf = r.equiangular && r.cyclic && std::abs(r.c_observed - r.c_expected) <= tol;
  r.agree = r.etf == r.frame.etf && r.equiangular == r.frame.equiangular;
  if (!r.agree) r.note = "positive-type and Gram verdicts disagree";
  return r;
}

}  // namespace zakframe
