#pragma once

// The two worked families:
//
//  * affine groups {x -> a x + b : a a nonzero square, b in F_q} for
//    q = 3 mod 4, whose orbit of a constant fiducial under ind alpha_1 is the
//    Paley harmonic ETF of q vectors in dimension (q - 1) / 2;
//  * Heisenberg groups mod d, where ind alpha_{0,1} orbits give SIC-POVMs
//    exactly when the quartic sums below hit (delta_{a,0} + delta_{h,0}) / (d + 1).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zakframe/frames.hpp"
#include "zakframe/gf.hpp"
#include "zakframe/groups.hpp"
#include "zakframe/repn.hpp"

namespace zakframe {

// ------------------------------------------------------------------- affine

/// H = (F_q, +) as Z_p^r (coefficient tuples, constant first), K the
/// squares acting by multiplication; K index k is dilation by g^{2k}.
struct AffineContext {
  FiniteField field;
  InductionSetting setting;
  std::vector<FieldElement> dilations;  // by K index
  std::vector<FieldElement> residues;
  int alpha_one = 0;

  int q() const { return field.order(); }
  int h_index(const FieldElement& b) const;
  /// Index in G of the map x -> a_k x + b.
  int element(const FieldElement& b, int k) const;
  /// alpha_b(tau_c) = exp(2 pi i tr(b c) / p).
  Character trace_character(const FieldElement& b) const;
  int alpha(const FieldElement& b) const;
};

/// Requires q = p^r > 3 with q = 3 mod 4. Verifies that dilation by a sends
/// alpha_b to alpha_{b / a}.
AffineContext build_affine(int q, std::optional<std::vector<int>> modulus = std::nullopt);

struct PaleyReport {
  int q = 0;
  int n = 0;
  int d = 0;
  double tight_constant = 0.0;     // upper frame bound of the reduction
  double tight_spread = 0.0;       // B - A
  double coherence_sq_min = 0.0;
  double coherence_sq_max = 0.0;
  double expected_coherence_sq = 0.0;  // (q + 1) / (q - 1)^2
  EtfCriterion criterion;
  ProjectiveOrbit orbit;
  // Residuals of the intermediate identities.
  double g_fiber_residual = 0.0;         // (Z_r g)(alpha_b) vs 2q/(q-1) chi_residues(b)
  std::vector<int> difference_counts;    // by field element index
  bool difference_set_ok = false;
  double g_abs_sq_fiber_residual = 0.0;  // (Z_r |g|^2)(alpha_b) vs its constants
  double product_identity_residual = 0.0;
  double constant_fiber_residual = 0.0;  // (Z_r 1)(alpha_b) vs q delta_{0,b}
  double indicator_fiber_residual = 0.0; // (Z_r chi_K)(alpha_b) vs 1
  double g_abs_sq_residual = 0.0;        // |g|^2 vs g'
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

PaleyReport paley_etf(const AffineContext& ctx, double tol = 1e-10);

// --------------------------------------------------------------- Heisenberg

/// r^m s^n t^k has index (m d + n) d + k; H = <r, s>, K = <t>.
struct HeisenbergContext {
  int d = 2;
  InductionSetting setting;
  int alpha_01 = 0;

  int element(int m, int n, int k) const;
  int r() const { return element(1, 0, 0); }
  int s() const { return element(0, 1, 0); }
  int t() const { return element(0, 0, 1); }
  int alpha(int a, int b) const;
};

/// Checks r^d = s^d = t^d = [r,s] = [t,s] = 1 and t r t^-1 = r s on the table.
HeisenbergContext build_heisenberg(int d);

/// Q(a, h) = sum_b f(t^{h+b}) conj f(t^b) conj f(t^{h+a+b}) f(t^{a+b}).
CMatrix sic_quartic_sums(std::span<const cplx> f);
/// T(a, h) = (delta_{a,0} + delta_{h,0}) / (d + 1).
CMatrix sic_targets(int d);
double sic_quartic_residual(std::span<const cplx> f);

/// sum_{a,h} |Q - T|^2.
double sic_merit(std::span<const cplx> f);
/// Real gradient packed as a complex vector G = 2 dPhi/d conj(f), so that
/// dPhi = Re sum conj(G_k) df_k.
CVector sic_merit_gradient(std::span<const cplx> f);

struct SicCandidate {
  int d = 0;
  CVector fiducial;
  double quartic_residual = 0.0;
  double gram_residual = 0.0;  // max |coherence_sq - 1/(d+1)| over the reduction
  int reduction_size = 0;
  bool certified = false;
  double merit = 0.0;
  // Search bookkeeping; zero for a plain verification.
  std::uint64_t seed = 0;
  int restart = -1;
  int restarts_run = 0;
  int iterations = 0;
  std::vector<double> merit_trace;
};

/// Certified iff max |Q - T| <= tol. Independently checks that the projective
/// reduction has d^2 vectors with squared coherence within tol of 1/(d+1);
/// throws ConsistencyError if the two verdicts differ.
SicCandidate verify_sic(const HeisenbergContext& ctx, std::span<const cplx> f, double tol = 1e-10);

struct SearchOptions {
  int d = 2;
  std::uint64_t seed = 0;
  int restarts = 200;
  int max_iters = 5000;
  double tol = 1e-8;
  /// 0 picks min(hardware threads, ZAKFRAME_THREADS if set).
  int threads = 0;
  std::optional<CVector> warm_start;  // used as restart 0 when given
};

/// Projected gradient descent on the unit sphere from seeded random starts,
/// Armijo backtracking (c = 1e-4, halving). Returns the lowest-index certified
/// restart, or the best uncertified one.
SicCandidate search_sic_fiducial(const SearchOptions& options);

/// Worker count for the restart pool: `requested` if positive, else the
/// hardware concurrency capped by ZAKFRAME_THREADS.
int resolve_thread_count(int requested);

}  // namespace zakframe
