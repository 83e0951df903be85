#pragma once

// The Zak transform relative to an abelian subgroup H of a finite group G:
//
//   (Zf)(alpha)(x) = sum_{h in H} f(x h) alpha(h),
//
// stored only on the transversal (the restricted transform Z_r). Values off
// the transversal follow from (Zf)(alpha)(x h) = conj(alpha(h)) (Zf)(alpha)(x).
//
// Measures: counting measure on G, H and the transversal, probability measure
// on the characters. The stored numbers are the raw sums above; the 1/|H^|
// weight only enters through weighted_inner().

#include <span>
#include <vector>

#include "zakframe/groups.hpp"
#include "zakframe/types.hpp"

namespace zakframe {

/// Complex function on a finite set (G, or the transversal), canonical order.
class GroupFunction {
 public:
  GroupFunction() = default;
  explicit GroupFunction(std::size_t n) : values_(n) {}
  explicit GroupFunction(CVector values) : values_(std::move(values)) {}

  static GroupFunction delta(std::size_t n, std::size_t at);
  static GroupFunction constant(std::size_t n, cplx c);

  std::size_t size() const { return values_.size(); }
  cplx& operator[](std::size_t i) { return values_[i]; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  const CVector& values() const { return values_; }
  std::span<const cplx> span() const { return values_; }

  double norm() const;

 private:
  CVector values_;
};

/// <f, g> = sum f conj(g) under counting measure.
cplx inner(const GroupFunction& f, const GroupFunction& g);
GroupFunction pointwise_product(const GroupFunction& f, const GroupFunction& g);
GroupFunction conjugate(const GroupFunction& f);
double max_abs_diff(const GroupFunction& f, const GroupFunction& g);

/// data(alpha, j) = (Z_r f)(alpha)(reps[j]); rows follow the canonical
/// character order, which matches the element order of H.
struct ZakArray {
  std::vector<std::vector<int>> characters;
  std::vector<int> reps;
  CMatrix data;

  int num_characters() const { return static_cast<int>(data.rows()); }
  int fiber_size() const { return static_cast<int>(data.cols()); }
  std::span<const cplx> fiber(int alpha) const { return data.row(alpha); }
};

ZakArray zak_right(const InductionSetting& s, const GroupFunction& f);

/// (Z' f)(alpha)(x) = sum_h f(h x) conj(alpha(h)) for every x in G: a
/// |H^| x |G| matrix.
CMatrix zak_left(const InductionSetting& s, const GroupFunction& f);

/// f(x_j h) = (1/|H^|) sum_alpha data(alpha, j) conj(alpha(h)).
GroupFunction zak_inverse(const InductionSetting& s, const ZakArray& z);

/// (1/|H^|) sum_alpha sum_j a(alpha, j) conj(b(alpha, j)).
cplx weighted_inner(const ZakArray& a, const ZakArray& b);
double weighted_norm(const ZakArray& a);

/// The fiber of character alpha on all of G, from its values on the transversal.
CVector extend_fiber(const InductionSetting& s, int alpha, std::span<const cplx> fiber);
/// Values on the transversal of a function on G.
CVector restrict_fiber(const InductionSetting& s, std::span<const cplx> on_group);

/// Both sides of the product and conjugation identities,
///   Z(f g)(alpha) = (1/|H^|) sum_beta (Zf)(beta) (Zg)(beta^-1 alpha),
///   (Z conj f)(alpha) = conj((Zf)(alpha^-1)),
///   Z|f|^2(alpha) = (1/|H^|) sum_beta (Zf)(beta) conj((Zf)(alpha^-1 beta)),
/// compared on all of G. Each field is a max absolute discrepancy.
struct ProductIdentityResidual {
  double product = 0.0;
  double conjugation = 0.0;
  double modulus_squared = 0.0;

  double max() const;
};

ProductIdentityResidual zak_product_identity(const InductionSetting& s, const GroupFunction& f,
                                             const GroupFunction& g);

}  // namespace zakframe
