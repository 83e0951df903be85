#pragma once

// Representations induced from characters of H, realized on L^2(transversal)
// as phased permutation matrices, plus the left/right regular actions,
// functions of positive type and the cyclicity / irreducibility tests.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zakframe/groups.hpp"
#include "zakframe/types.hpp"
#include "zakframe/zak.hpp"

namespace zakframe {

/// M(j, perm[j]) = phases[j]; every other entry is zero.
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<int> perm, CVector phases);
  static MonomialMatrix identity(int n);

  int dimension() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const CVector& phases() const { return phases_; }

  CVector apply(std::span<const cplx> v) const;
  CMatrix dense() const;
  MonomialMatrix operator*(const MonomialMatrix& other) const;
  MonomialMatrix adjoint() const;

  /// Max deviation of |phase| from 1; perm is a bijection by construction.
  double phase_defect() const;

 private:
  std::vector<int> perm_;
  CVector phases_;
};

/// (ind alpha)(x) on L^2(transversal): [pi(x) f](y) = f(x^-1 y) for f in F_alpha.
MonomialMatrix induced_rep_matrix(const InductionSetting& s, int alpha, int x);
MonomialMatrix induced_rep_matrix(const InductionSetting& s, const Character& alpha, int x);

/// pi(x) f for f on the transversal.
CVector orbit_vector(const InductionSetting& s, int alpha, int x, std::span<const cplx> f);

enum class Side { left, right };

/// Left: (L_y f)(z) = f(y^-1 z). Right: (R_h f)(z) = f(z h), with y = into(h)
/// required to lie in H.
GroupFunction regular_action(const InductionSetting& s, Side side, int y, const GroupFunction& f);

/// g(x) = <f, pi(x) f> on G, together with its restricted Zak transform. For
/// semidirect settings the transform is compared against the closed form
///   (Z_r g)(beta)(x) = |H| sum_{y in K, y . alpha = beta} f(x y) conj(f(y)).
struct PositiveTypeFunction {
  GroupFunction values;
  CVector fiducial;   // normalized
  double input_norm;  // norm of the fiducial as given
  bool normalized;    // true when the input was rescaled
  std::string warning;
  ZakArray zak;
  std::optional<ZakArray> closed_form;
  double closed_form_residual = 0.0;
};

/// Throws ConsistencyError if the closed form misses by more than 1e-12, and
/// InvalidArgument for a zero fiducial.
PositiveTypeFunction positive_type(const InductionSetting& s, int alpha, std::span<const cplx> f);

/// The |G| x |transversal| matrix whose rows are pi(x) f.
CMatrix orbit_matrix(const InductionSetting& s, int alpha, std::span<const cplx> f);

/// span{pi(x) f} = L^2(transversal), decided by singular values above
/// 1e-10 * sigma_max.
bool is_cyclic(const InductionSetting& s, int alpha, std::span<const cplx> f);

/// True when the little group of alpha is trivial, which guarantees that
/// ind alpha is irreducible. False is inconclusive.
bool is_irreducible_sufficient(const InductionSetting& s, int alpha);

}  // namespace zakframe
