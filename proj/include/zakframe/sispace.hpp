#pragma once

// Right H-shift-invariant subspaces of L^2(G) through their range functions
// alpha -> J(alpha) <= L^2(transversal), and fiberwise frame bounds of the
// shift system E(A) = {R_h f_j}.

#include <optional>
#include <span>
#include <vector>

#include "zakframe/groups.hpp"
#include "zakframe/zak.hpp"

namespace zakframe {

/// One orthonormal basis (possibly empty) per character.
struct RangeFunction {
  int fiber_dim = 0;
  std::vector<std::vector<CVector>> bases;

  int dimension(int alpha) const { return static_cast<int>(bases[alpha].size()); }
  int total_dimension() const;
};

/// J_A(alpha) = span{(Z_r f_j)(alpha)}. Fibers are dropped once their
/// Gram-Schmidt residual is at most 1e-10 times the largest fiber norm
/// across the whole system.
RangeFunction range_of_generators(const InductionSetting& s, std::span<const GroupFunction> generators);

/// Every fiber of f lies in J(alpha) up to 1e-10 times f's largest fiber norm.
bool membership(const InductionSetting& s, const GroupFunction& f, const RangeFunction& j, double tol = 1e-10);

/// Largest per-fiber projection residual of f against J, relative to f's
/// largest fiber norm (0 for f = 0).
double membership_residual(const InductionSetting& s, const GroupFunction& f, const RangeFunction& j);

/// Frame bounds of {(Z_r f_j)(alpha)}_j on J(alpha) for each alpha (nullopt
/// for a zero fiber), and the global bounds over the nonzero fibers.
struct FiberBounds {
  std::vector<std::optional<std::pair<double, double>>> per_fiber;
  std::vector<int> dimensions;
  double lower = 0.0;
  double upper = 0.0;
};

/// Throws InvalidArgument("zero system") when every fiber vanishes.
FiberBounds fiber_frame_bounds(const InductionSetting& s, std::span<const GroupFunction> generators);

}  // namespace zakframe
