#include "zakframe/repn.hpp"

#include <algorithm>
#include <cmath>

#include "zakframe/linalg.hpp"

namespace zakframe {

MonomialMatrix::MonomialMatrix(std::vector<int> perm, CVector phases) : perm_(std::move(perm)), phases_(std::move(phases)) {
  if (perm_.size() != phases_.size()) throw InvalidArgument("monomial matrix: perm and phases differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
      throw InvalidArgument("monomial matrix: perm is not a permutation");
    seen[p] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return MonomialMatrix(std::move(perm), CVector(n, 1.0));
}

CVector MonomialMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != perm_.size()) throw InvalidArgument("monomial matrix: vector length mismatch");
  CVector out(v.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) out[j] = phases_[j] * v[perm_[j]];
  return out;
}

CMatrix MonomialMatrix::dense() const {
  CMatrix m(perm_.size(), perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) m(j, perm_[j]) = phases_[j];
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& other) const {
  if (other.dimension() != dimension()) throw InvalidArgument("monomial matrix: dimension mismatch");
  std::vector<int> perm(perm_.size());
  CVector phases(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    perm[j] = other.perm_[perm_[j]];
    phases[j] = phases_[j] * other.phases_[perm_[j]];
  }
  return MonomialMatrix(std::move(perm), std::move(phases));
}

MonomialMatrix MonomialMatrix::adjoint() const {
  std::vector<int> perm(perm_.size());
  CVector phases(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    perm[perm_[j]] = static_cast<int>(j);
    phases[perm_[j]] = std::conj(phases_[j]);
  }
  return MonomialMatrix(std::move(perm), std::move(phases));
}

double MonomialMatrix::phase_defect() const {
  double m = 0.0;
  for (const cplx& z : phases_) m = std::max(m, std::abs(std::abs(z) - 1.0));
  return m;
}

MonomialMatrix induced_rep_matrix(const InductionSetting& s, int alpha, int x) {
  if (alpha < 0 || alpha >= s.num_characters()) throw InvalidArgument("induced_rep_matrix: character out of range");
  if (x < 0 || x >= s.group_order()) throw InvalidArgument("induced_rep_matrix: element out of range");
  const int n = s.transversal_size();
  const int x_inv = s.group.inv(x);
  std::vector<int> perm(n);
  CVector phases(n);
  // x^-1 y_j = y_k h, and f(y_k h) = conj(alpha(h)) f(y_k) on F_alpha.
  for (int j = 0; j < n; ++j) {
    const Transversal::Factor c = s.transversal.coset_of(s.group.mul(x_inv, s.transversal.rep(j)));
    perm[j] = c.rep;
    phases[j] = std::conj(s.characters(alpha, c.h));
  }
  return MonomialMatrix(std::move(perm), std::move(phases));
}

MonomialMatrix induced_rep_matrix(const InductionSetting& s, const Character& alpha, int x) {
  return induced_rep_matrix(s, s.character_index(alpha), x);
}

CVector orbit_vector(const InductionSetting& s, int alpha, int x, std::span<const cplx> f) {
  return induced_rep_matrix(s, alpha, x).apply(f);
}

GroupFunction regular_action(const InductionSetting& s, Side side, int y, const GroupFunction& f) {
  const int n = s.group_order();
  if (static_cast<int>(f.size()) != n) throw InvalidArgument("regular_action: function size does not match group");
  if (y < 0 || y >= n) throw InvalidArgument("regular_action: element out of range");
  GroupFunction out(n);
  if (side == Side::left) {
    const int y_inv = s.group.inv(y);
    for (int z = 0; z < n; ++z) out[z] = f[s.group.mul(y_inv, z)];
  } else {
    if (!s.subgroup.preimage(y)) throw InvalidArgument("regular_action: right translation needs an element of H");
    for (int z = 0; z < n; ++z) out[z] = f[s.group.mul(z, y)];
  }
  return out;
}

PositiveTypeFunction positive_type(const InductionSetting& s, int alpha, std::span<const cplx> f) {
  const int nr = s.transversal_size();
  if (static_cast<int>(f.size()) != nr) throw InvalidArgument("positive_type: fiducial must live on the transversal");
  const double nf = linalg::norm(f);
  if (nf == 0.0) throw InvalidArgument("positive_type: zero fiducial");

  PositiveTypeFunction out{GroupFunction(s.group_order()), CVector(f.begin(), f.end()), nf, false, {}, {}, {}, 0.0};
  if (std::abs(nf - 1.0) > 1e-14) {
    out.normalized = true;
    out.warning = "fiducial had norm " + std::to_string(nf) + "; normalized before use";
    for (cplx& z : out.fiducial) z /= nf;
  }
  for (int x = 0; x < s.group_order(); ++x)
    out.values[x] = linalg::inner(out.fiducial, orbit_vector(s, alpha, x, out.fiducial));
  out.zak = zak_right(s, out.values);

  if (s.semidirect) {
    // Here the transversal is the complement K, a subgroup, so x y stays in it.
    const int nh = s.subgroup_order();
    std::vector<int> beta_of(nr);
    const Character a = s.character(alpha);
    for (int k = 0; k < nr; ++k) beta_of[k] = s.character_index(conj_character(s, s.transversal.rep(k), a));
    ZakArray cf = out.zak;
    for (int b = 0; b < nh; ++b)
      for (int j = 0; j < nr; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < nr; ++k) {
          if (beta_of[k] != b) continue;
          const Transversal::Factor xy = s.transversal.coset_of(s.group.mul(s.transversal.rep(j), s.transversal.rep(k)));
          acc += out.fiducial[xy.rep] * std::conj(out.fiducial[k]);
        }
        cf.data(b, j) = static_cast<double>(nh) * acc;
      }
    out.closed_form_residual = linalg::max_abs_diff(cf.data, out.zak.data);
    out.closed_form = std::move(cf);
    if (out.closed_form_residual > 1e-12)
      throw ConsistencyError("positive_type: Zak fibers of g miss the closed form by " +
                             std::to_string(out.closed_form_residual));
  }
  return out;
}

CMatrix orbit_matrix(const InductionSetting& s, int alpha, std::span<const cplx> f) {
  if (static_cast<int>(f.size()) != s.transversal_size())
    throw InvalidArgument("orbit_matrix: fiducial must live on the transversal");
  CMatrix m(s.group_order(), f.size());
  for (int x = 0; x < s.group_order(); ++x) {
    const CVector v = orbit_vector(s, alpha, x, f);
    std::copy(v.begin(), v.end(), m.row(x).begin());
  }
  return m;
}

bool is_cyclic(const InductionSetting& s, int alpha, std::span<const cplx> f) {
  return linalg::numerical_rank(orbit_matrix(s, alpha, f), 1e-10) == static_cast<std::size_t>(s.transversal_size());
}

bool is_irreducible_sufficient(const InductionSetting& s, int alpha) {
  return little_group(s, s.character(alpha)).size() == 1;
}

}  // namespace zakframe
