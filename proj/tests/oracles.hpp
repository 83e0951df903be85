#pragma once

// Slow, direct reference computations used to check the library. Nothing here
// calls the code under test beyond reading group tables.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "zakframe/groups.hpp"
#include "zakframe/types.hpp"

namespace oracle {

using zakframe::cplx;
using zakframe::CMatrix;
using zakframe::CVector;
using zakframe::InductionSetting;

inline cplx character_value(const std::vector<int>& factors, const std::vector<int>& a, const std::vector<int>& h) {
  double turns = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i) turns += static_cast<double>(a[i] * h[i]) / factors[i];
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline std::vector<int> h_tuple(const std::vector<int>& factors, int index) {
  std::vector<int> t(factors.size());
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    t[i] = index % factors[i];
    index /= factors[i];
  }
  return t;
}

/// chi[alpha][h] computed from scratch.
inline std::vector<std::vector<cplx>> character_table(const InductionSetting& s) {
  const auto& factors = s.subgroup.subgroup().factors();
  const int n = s.subgroup_order();
  std::vector<std::vector<cplx>> chi(n, std::vector<cplx>(n));
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h) chi[a][h] = character_value(factors, h_tuple(factors, a), h_tuple(factors, h));
  return chi;
}

/// (Zf)(alpha)(x) = sum_h f(x h) alpha(h) for every x in G: |H| x |G|.
inline CMatrix zak_full(const InductionSetting& s, const CVector& f) {
  const auto chi = character_table(s);
  const int nh = s.subgroup_order();
  CMatrix z(nh, s.group_order());
  for (int a = 0; a < nh; ++a)
    for (int x = 0; x < s.group_order(); ++x) {
      cplx acc = 0.0;
      for (int h = 0; h < nh; ++h) acc += f[s.group.mul(x, s.subgroup.into(h))] * chi[a][h];
      z(a, x) = acc;
    }
  return z;
}

/// The element of F_alpha on G whose restriction to the transversal is v.
inline CVector lift(const InductionSetting& s, int alpha, const CVector& v) {
  const auto chi = character_table(s);
  CVector out(s.group_order());
  for (int j = 0; j < s.transversal_size(); ++j)
    for (int h = 0; h < s.subgroup_order(); ++h)
      out[s.group.mul(s.transversal.rep(j), s.subgroup.into(h))] = std::conj(chi[alpha][h]) * v[j];
  return out;
}

/// [pi(x) v] through the materialized F_alpha model: lift, translate, restrict.
inline CVector induced_apply(const InductionSetting& s, int alpha, int x, const CVector& v) {
  const CVector big = lift(s, alpha, v);
  const int xi = s.group.inv(x);
  CVector out(s.transversal_size());
  for (int j = 0; j < s.transversal_size(); ++j) out[j] = big[s.group.mul(xi, s.transversal.rep(j))];
  return out;
}

inline CMatrix induced_dense(const InductionSetting& s, int alpha, int x) {
  const int n = s.transversal_size();
  CMatrix m(n, n);
  for (int k = 0; k < n; ++k) {
    CVector e(n);
    e[k] = 1.0;
    const CVector col = induced_apply(s, alpha, x, e);
    for (int j = 0; j < n; ++j) m(j, k) = col[j];
  }
  return m;
}

inline cplx dot(const CVector& a, const CVector& b) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

inline double norm(const CVector& a) { return std::sqrt(std::abs(dot(a, a))); }

inline double max_diff(const CVector& a, const CVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// Displacements X^a Z^b f on C^d, (X f)[k] = f[k-1], (Z f)[k] = w^k f[k].
inline std::vector<CVector> weyl_heisenberg_orbit(const CVector& f) {
  const int d = static_cast<int>(f.size());
  std::vector<CVector> out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      CVector v(d);
      for (int k = 0; k < d; ++k)
        v[k] = std::polar(1.0, 2.0 * std::numbers::pi * b * k / d) * f[((k - a) % d + d) % d];
      out.push_back(v);
    }
  return out;
}

struct CoherenceRange {
  double min = 1e300;
  double max = 0.0;
};

inline CoherenceRange coherence_range(const std::vector<CVector>& vs) {
  CoherenceRange r;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const double c = std::norm(dot(vs[i], vs[j])) / (std::norm(norm(vs[i])) * std::norm(norm(vs[j])));
      r.min = std::min(r.min, c);
      r.max = std::max(r.max, c);
    }
  return r;
}

/// Complex Gaussian vector, unit variance per entry.
inline CVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (cplx& z : v) {
    const double re = g(rng);
    const double im = g(rng);
    z = {re, im};
  }
  return v;
}

inline CVector random_unit_vector(std::mt19937_64& rng, std::size_t n) {
  CVector v = random_vector(rng, n);
  const double nv = norm(v);
  for (cplx& z : v) z /= nv;
  return v;
}

/// Exact SIC fiducials used as fixtures.
inline CVector sic_fiducial_d2() {
  const double a = std::sqrt((1.0 + 1.0 / std::sqrt(3.0)) / 2.0);
  const double b = std::sqrt((1.0 - 1.0 / std::sqrt(3.0)) / 2.0);
  return {a, std::polar(b, std::numbers::pi / 4.0)};
}

inline CVector sic_fiducial_d3() { return {0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}; }

}  // namespace oracle
