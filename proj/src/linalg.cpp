#include "zakframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace zakframe::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 80;

double off_diagonal_sq(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

double frobenius_sq(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return s;
}

}  // namespace

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw InvalidArgument("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double norm_sq(std::span<const cplx> a) {
  double s = 0.0;
  for (const cplx& z : a) s += std::norm(z);
  return s;
}

double norm(std::span<const cplx> a) { return std::sqrt(norm_sq(a)); }

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: inner dimension mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

CMatrix gram_matrix(const std::vector<CVector>& vectors) {
  const std::size_t n = vectors.size();
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = inner(vectors[j], vectors[i]);
      g(j, i) = std::conj(g(i, j));
    }
  return g;
}

CMatrix frame_operator(const std::vector<CVector>& vectors, std::size_t dim) {
  CMatrix s(dim, dim);
  for (const CVector& v : vectors) {
    if (v.size() != dim) throw InvalidArgument("frame_operator: inconsistent vector dimension");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) s(i, j) += v[i] * std::conj(v[j]);
  }
  return s;
}

Eigensystem hermitian_eigensystem(const CMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw InvalidArgument("hermitian_eigensystem: matrix not square");

  // Symmetrize from the upper triangle so round-off in the lower half is ignored.
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = input(i, j);
      a(j, i) = std::conj(input(i, j));
    }
  }
  CMatrix v = CMatrix::identity(n);

  const double total = frobenius_sq(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_sq(a) <= kEps * kEps * total) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double b = std::abs(a(p, q));
        if (b == 0.0) continue;
        // Strip the phase of a(p, q), then apply a real rotation to the
        // resulting real symmetric 2x2 block.
        const cplx phase = a(p, q) / b;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * b, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const cplx ephi_conj = std::conj(phase);
        // U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on coordinates (p, q).
        const cplx u_pp = c, u_pq = s, u_qp = -s * ephi_conj, u_qq = c * ephi_conj;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  Eigensystem out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) { return hermitian_eigensystem(a).values; }

std::vector<double> singular_values(const CMatrix& input) {
  // Work on whichever orientation has fewer columns.
  CMatrix a = input.cols() <= input.rows() ? input : adjoint(input);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  auto col_inner = [&](std::size_t i, std::size_t j) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += std::conj(a(k, i)) * a(k, j);
    return s;
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = col_inner(i, i).real();
        const double beta = col_inner(j, j).real();
        const cplx gamma = col_inner(i, j);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx phase_conj = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const cplx xi = a(k, i);
          const cplx xj = a(k, j) * phase_conj;
          a(k, i) = c * xi - s * xj;
          a(k, j) = s * xi + c * xj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(col_inner(j, j).real());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::size_t numerical_rank(const CMatrix& a, double rel_tol) {
  const std::vector<double> sv = singular_values(a);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = rel_tol * sv.front();
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cut; }));
}

std::vector<CVector> orthonormalize(const std::vector<CVector>& vectors, double drop_below) {
  std::vector<CVector> basis;
  for (const CVector& v : vectors) {
    CVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& e : basis) {
        const cplx c = inner(w, e);
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * e[k];
      }
    }
    const double nw = norm(w);
    if (nw <= drop_below) continue;
    for (cplx& z : w) z /= nw;
    basis.push_back(std::move(w));
  }
  return basis;
}

double projection_residual(std::span<const cplx> v, const std::vector<CVector>& basis) {
  CVector w(v.begin(), v.end());
  for (int pass = 0; pass < 2; ++pass) {
    for (const CVector& e : basis) {
      const cplx c = inner(w, e);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * e[k];
    }
  }
  return norm(w);
}

}  // namespace zakframe::linalg
