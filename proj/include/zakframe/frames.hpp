#pragma once

// Frame analysis of finite vector systems and of orbits {pi(x) f} of an
// induced representation: frame bounds, coherence, the Welch bound,
// projective stabilizers and reductions, and the positive-type ETF test.

#include <span>
#include <string>
#include <vector>

#include "zakframe/groups.hpp"
#include "zakframe/types.hpp"

namespace zakframe {

inline constexpr double kFrameTolerance = 1e-10;

struct FrameReport {
  int n = 0;  // number of vectors
  int d = 0;  // ambient dimension
  CMatrix gram;
  double lower_bound = 0.0;  // smallest eigenvalue of the frame operator
  double upper_bound = 0.0;  // largest
  double coherence_sq_min = 0.0;
  double coherence_sq_max = 0.0;
  double welch_sq = 0.0;
  bool unit_norm = false;
  bool tight = false;
  bool equiangular = false;
  bool spanning = false;
  bool etf = false;
};

/// Throws InvalidArgument on an empty list, mixed dimensions or a zero vector.
FrameReport frame_report(const std::vector<CVector>& vectors, double tol = kFrameTolerance);

/// (n - d) / (d (n - 1)) for n > d, else 0.
double welch_bound_sq(int n, int d);

/// {x : |g(x)|^2 >= 1 - tol}, sorted. Throws ConsistencyError when the set is
/// not closed under multiplication.
std::vector<int> projective_stabilizer(const InductionSetting& s, int alpha, std::span<const cplx> f,
                                       double tol = kFrameTolerance);

struct ProjectiveOrbit {
  int alpha = 0;
  CVector fiducial;
  std::vector<int> stabilizer;
  std::vector<int> representatives;  // least element of each coset x L
  std::vector<CVector> vectors;      // pi(x_j) f
};

ProjectiveOrbit projective_reduction(const InductionSetting& s, int alpha, std::span<const cplx> f,
                                     double tol = kFrameTolerance);

/// |g|^2 must be 1 on the stabilizer L and a single value C != 1 off it; the
/// reduction is an ETF iff additionally f is cyclic and C = (|H|-|L|)/(|G|-|L|).
/// The same verdict is recomputed from the Gram matrix of the reduction.
struct EtfCriterion {
  std::vector<double> g_abs_sq;
  int stabilizer_size = 0;
  int reduction_size = 0;
  bool degenerate = false;  // orbit is a single line (L = G)
  bool two_valued = false;
  double c_observed = 0.0;
  double c_expected = 0.0;
  double coset_spread = 0.0;  // max spread of |g|^2 inside a coset of L
  bool cyclic = false;
  bool equiangular = false;
  bool etf = false;
  FrameReport frame;
  bool agree = false;  // positive-type verdict == Gram verdict
  std::string note;
};

EtfCriterion etf_criterion(const InductionSetting& s, int alpha, std::span<const cplx> f,
                           double tol = kFrameTolerance);

}  // namespace zakframe
