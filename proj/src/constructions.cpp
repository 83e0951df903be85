#include "zakframe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <random>
#include <string>
#include <thread>

#include "zakframe/linalg.hpp"
#include "zakframe/zak.hpp"

namespace zakframe {

// ------------------------------------------------------------------- affine

int AffineContext::h_index(const FieldElement& b) const { return setting.subgroup.subgroup().index(b.coeffs); }

int AffineContext::element(const FieldElement& b, int k) const {
  return h_index(b) * static_cast<int>(dilations.size()) + k;
}

Character AffineContext::trace_character(const FieldElement& b) const {
  // tr(b c) = sum_i c_i tr(b x^i), so the exponent tuple is (tr(b x^i))_i.
  std::vector<int> e(field.degree());
  for (int i = 0; i < field.degree(); ++i) {
    FieldElement xi = field.zero();
    xi.coeffs[i] = 1;
    e[i] = field.trace(field.mul(b, xi));
  }
  return Character{e};
}

int AffineContext::alpha(const FieldElement& b) const { return setting.character_index(trace_character(b)); }

namespace {

InductionSetting affine_setting(const FiniteField& field, const std::vector<FieldElement>& dilations) {
  SemidirectSpec spec;
  spec.modulus = field.characteristic();
  spec.rank = field.degree();
  spec.complement = FiniteGroup::cyclic(static_cast<int>(dilations.size()));
  for (const FieldElement& a : dilations) spec.action.push_back(field.multiplication_matrix(a));
  return build_semidirect(spec);
}

}  // namespace

AffineContext build_affine(int q, std::optional<std::vector<int>> modulus) {
  if (q <= 3) throw InvalidArgument("affine construction needs q > 3, got " + std::to_string(q));
  if (q % 4 != 3) throw InvalidArgument("affine construction needs q = 3 mod 4, got " + std::to_string(q));
  FiniteField field = FiniteField::of_order(q, std::move(modulus));

  const FieldElement g = field.primitive_element();
  const FieldElement g2 = field.mul(g, g);
  std::vector<FieldElement> dilations;
  FieldElement a = field.one();
  for (int k = 0; k < (q - 1) / 2; ++k) {
    dilations.push_back(a);
    a = field.mul(a, g2);
  }

  InductionSetting setting = affine_setting(field, dilations);
  AffineContext ctx{field, std::move(setting), dilations, quadratic_residues(field), 0};
  ctx.alpha_one = ctx.alpha(field.one());

  for (int k = 0; k < static_cast<int>(dilations.size()); ++k) {
    const FieldElement a_inv = field.inv(dilations[k]);
    for (const FieldElement& b : field.elements()) {
      const Character moved = conj_character(ctx.setting, ctx.element(field.zero(), k), ctx.trace_character(b));
      if (ctx.setting.character_index(moved) != ctx.alpha(field.mul(b, a_inv)))
        throw ConsistencyError("affine group: dilation does not act on characters as alpha_b -> alpha_{b/a}");
    }
  }
  return ctx;
}

PaleyReport paley_etf(const AffineContext& ctx, double tol) {
  const InductionSetting& s = ctx.setting;
  const FiniteField& field = ctx.field;
  const int q = ctx.q();
  const int nk = static_cast<int>(ctx.dilations.size());
  const double qd = q;

  PaleyReport r;
  r.q = q;
  auto fail = [&](const std::string& what) { r.failures.push_back(what); };

  const CVector f(nk, std::sqrt(2.0 / (qd - 1.0)));
  r.criterion = etf_criterion(s, ctx.alpha_one, f, tol);
  r.orbit = projective_reduction(s, ctx.alpha_one, f, tol);
  const FrameReport& fr = r.criterion.frame;
  r.n = fr.n;
  r.d = fr.d;
  r.tight_constant = fr.upper_bound;
  r.tight_spread = fr.upper_bound - fr.lower_bound;
  r.coherence_sq_min = fr.coherence_sq_min;
  r.coherence_sq_max = fr.coherence_sq_max;
  r.expected_coherence_sq = (qd + 1.0) / ((qd - 1.0) * (qd - 1.0));

  std::vector<bool> is_residue(q, false);
  for (const FieldElement& c : ctx.residues) is_residue[field.index(c)] = true;
  const std::vector<FieldElement> elems = field.elements();

  // Fiber of g.
  const PositiveTypeFunction pt = positive_type(s, ctx.alpha_one, f);
  for (const FieldElement& b : elems) {
    const double expect = is_residue[field.index(b)] ? 2.0 * qd / (qd - 1.0) : 0.0;
    for (int j = 0; j < nk; ++j)
      r.g_fiber_residual = std::max(r.g_fiber_residual, std::abs(pt.zak.data(ctx.alpha(b), j) - expect));
  }

  // Difference-set counts.
  r.difference_set_ok = true;
  for (const FieldElement& b : elems) {
    const int c = difference_count(field, ctx.residues, b);
    r.difference_counts.push_back(c);
    const int expect = field.is_zero(b) ? (q - 1) / 2 : (q - 3) / 4;
    if (c != expect) r.difference_set_ok = false;
  }

  // Fiber of |g|^2, directly and through the product identity.
  GroupFunction g2(s.group_order());
  for (int x = 0; x < s.group_order(); ++x) g2[x] = std::norm(pt.values[x]);
  const ZakArray zg2 = zak_right(s, g2);
  for (const FieldElement& b : elems) {
    const double expect = field.is_zero(b) ? 2.0 * qd / (qd - 1.0) : qd * (qd - 3.0) / ((qd - 1.0) * (qd - 1.0));
    for (int j = 0; j < nk; ++j)
      r.g_abs_sq_fiber_residual = std::max(r.g_abs_sq_fiber_residual, std::abs(zg2.data(ctx.alpha(b), j) - expect));
  }
  r.product_identity_residual = zak_product_identity(s, pt.values, pt.values).max();

  // Transforms of 1 and chi_K, and the comparison |g|^2 = g'.
  const ZakArray z_one = zak_right(s, GroupFunction::constant(s.group_order(), 1.0));
  GroupFunction chi_k(s.group_order());
  for (int k = 0; k < nk; ++k) chi_k[ctx.element(field.zero(), k)] = 1.0;
  const ZakArray z_chi = zak_right(s, chi_k);
  for (const FieldElement& b : elems) {
    const int a = ctx.alpha(b);
    for (int j = 0; j < nk; ++j) {
      r.constant_fiber_residual =
          std::max(r.constant_fiber_residual, std::abs(z_one.data(a, j) - (field.is_zero(b) ? qd : 0.0)));
      r.indicator_fiber_residual = std::max(r.indicator_fiber_residual, std::abs(z_chi.data(a, j) - 1.0));
    }
  }
  const double off = (qd + 1.0) / ((qd - 1.0) * (qd - 1.0));
  for (int x = 0; x < s.group_order(); ++x) {
    const double expect = chi_k[x].real() == 1.0 ? 1.0 : off;
    r.g_abs_sq_residual = std::max(r.g_abs_sq_residual, std::abs(g2[x].real() - expect));
  }

  if (r.n != q) fail("reduction has " + std::to_string(r.n) + " vectors, expected q = " + std::to_string(q));
  if (r.d != (q - 1) / 2) fail("dimension " + std::to_string(r.d) + ", expected (q-1)/2");
  if (std::abs(r.tight_constant - 2.0 * qd / (qd - 1.0)) > tol) fail("tight constant differs from 2q/(q-1)");
  if (r.tight_spread > tol * r.tight_constant) fail("frame is not tight");
  if (std::abs(r.coherence_sq_min - r.expected_coherence_sq) > tol ||
      std::abs(r.coherence_sq_max - r.expected_coherence_sq) > tol)
    fail("squared coherence differs from (q+1)/(q-1)^2");
  if (!r.criterion.etf) fail("positive-type criterion does not certify an ETF");
  if (!r.criterion.agree) fail("positive-type and Gram verdicts disagree");
  if (r.g_fiber_residual > tol) fail("Zak fiber of g off its closed form");
  if (!r.difference_set_ok) fail("residues are not a (q,(q-1)/2,(q-3)/4) difference set");
  if (r.g_abs_sq_fiber_residual > tol) fail("Zak fiber of |g|^2 off its closed form");
  if (r.product_identity_residual > tol) fail("product identity residual too large");
  if (r.constant_fiber_residual > tol) fail("Zak transform of 1 off q delta");
  if (r.indicator_fiber_residual > tol) fail("Zak transform of chi_K off 1");
  if (r.g_abs_sq_residual > tol) fail("|g|^2 differs from g'");
  return r;
}

// --------------------------------------------------------------- Heisenberg

int HeisenbergContext::element(int m, int n, int k) const {
  auto md = [this](int v) { return ((v % d) + d) % d; };
  return (md(m) * d + md(n)) * d + md(k);
}

int HeisenbergContext::alpha(int a, int b) const { return setting.character_index(Character{{a, b}}); }

namespace {

InductionSetting heisenberg_setting(int d) {
  SemidirectSpec spec;
  spec.modulus = d;
  spec.rank = 2;
  spec.complement = FiniteGroup::cyclic(d);
  for (int k = 0; k < d; ++k) spec.action.push_back(IntMatrix{{1, 0}, {k, 1}});  // (m, n) -> (m, n + k m)
  return build_semidirect(spec);
}

}  // namespace

HeisenbergContext build_heisenberg(int d) {
  if (d < 2) throw InvalidArgument("Heisenberg group needs d >= 2, got " + std::to_string(d));
  HeisenbergContext ctx{d, heisenberg_setting(d), 0};
  ctx.alpha_01 = ctx.alpha(0, 1);

  const FiniteGroup& g = ctx.setting.group;
  const int e = g.identity();
  const int r = ctx.r(), s = ctx.s(), t = ctx.t();
  auto comm = [&](int a, int b) { return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))); };
  const bool ok = g.pow(r, d) == e && g.pow(s, d) == e && g.pow(t, d) == e && comm(r, s) == e && comm(t, s) == e &&
                  g.mul(g.mul(t, r), g.inv(t)) == g.mul(r, s);
  if (!ok) throw ConsistencyError("Heisenberg table violates its defining relations");
  return ctx;
}

CMatrix sic_quartic_sums(std::span<const cplx> f) {
  const int d = static_cast<int>(f.size());
  CMatrix q(d, d);
  for (int a = 0; a < d; ++a)
    for (int h = 0; h < d; ++h) {
      cplx acc = 0.0;
      for (int b = 0; b < d; ++b)
        acc += f[(h + b) % d] * std::conj(f[b]) * std::conj(f[(h + a + b) % d]) * f[(a + b) % d];
      q(a, h) = acc;
    }
  return q;
}

CMatrix sic_targets(int d) {
  CMatrix t(d, d);
  for (int a = 0; a < d; ++a)
    for (int h = 0; h < d; ++h) t(a, h) = ((a == 0) + (h == 0)) / static_cast<double>(d + 1);
  return t;
}

double sic_quartic_residual(std::span<const cplx> f) {
  return linalg::max_abs_diff(sic_quartic_sums(f), sic_targets(static_cast<int>(f.size())));
}

double sic_merit(std::span<const cplx> f) {
  const int d = static_cast<int>(f.size());
  const CMatrix q = sic_quartic_sums(f);
  const CMatrix t = sic_targets(d);
  double m = 0.0;
  for (int a = 0; a < d; ++a)
    for (int h = 0; h < d; ++h) m += std::norm(q(a, h) - t(a, h));
  return m;
}

CVector sic_merit_gradient(std::span<const cplx> f) {
  const int d = static_cast<int>(f.size());
  const CMatrix q = sic_quartic_sums(f);
  const CMatrix t = sic_targets(d);
  auto at = [&](int i) { return f[((i % d) + d) % d]; };
  CVector grad(d);
  for (int k = 0; k < d; ++k) {
    cplx acc = 0.0;
    for (int a = 0; a < d; ++a)
      for (int h = 0; h < d; ++h) {
        // conj(f_k) enters Q(a, h) at b = k and at b = k - h - a.
        const cplx dq = at(h + k) * std::conj(at(h + a + k)) * at(a + k) + at(k - a) * std::conj(at(k - h - a)) * at(k - h);
        acc += dq * std::conj(q(a, h) - t(a, h));
      }
    grad[k] = 4.0 * acc;
  }
  return grad;
}

SicCandidate verify_sic(const HeisenbergContext& ctx, std::span<const cplx> f, double tol) {
  const int d = ctx.d;
  if (static_cast<int>(f.size()) != d) throw InvalidArgument("verify_sic: fiducial must have d entries");
  const double nf = linalg::norm(f);
  if (nf == 0.0) throw InvalidArgument("verify_sic: zero fiducial");

  SicCandidate c;
  c.d = d;
  c.fiducial.assign(f.begin(), f.end());
  for (cplx& z : c.fiducial) z /= nf;
  c.quartic_residual = sic_quartic_residual(c.fiducial);
  c.merit = sic_merit(c.fiducial);

  const ProjectiveOrbit orbit = projective_reduction(ctx.setting, ctx.alpha_01, c.fiducial);
  c.reduction_size = static_cast<int>(orbit.vectors.size());
  const FrameReport fr = frame_report(orbit.vectors, tol);
  const double target = 1.0 / (d + 1);
  c.gram_residual =
      c.reduction_size > 1 ? std::max(std::abs(fr.coherence_sq_max - target), std::abs(fr.coherence_sq_min - target)) : 1.0;

  const bool quartic_ok = c.quartic_residual <= tol;
  const bool gram_ok = c.reduction_size == d * d && c.gram_residual <= tol;
  if (quartic_ok != gram_ok)
    throw ConsistencyError("verify_sic: quartic residual " + std::to_string(c.quartic_residual) +
                           " and Gram residual " + std::to_string(c.gram_residual) + " disagree at tol " +
                           std::to_string(tol));
  c.certified = quartic_ok;
  return c;
}

// ------------------------------------------------------------------- search

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("ZAKFRAME_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

namespace {

struct DescentResult {
  CVector f;
  double merit = 0.0;
  int iterations = 0;
  std::vector<double> trace;
};

void normalize(CVector& f) {
  const double n = linalg::norm(f);
  for (cplx& z : f) z /= n;
}

CVector random_start(int d, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector f(d);
  for (cplx& z : f) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  normalize(f);
  return f;
}

DescentResult descend(CVector f, int max_iters, double stop_merit) {
  constexpr double kArmijo = 1e-4;
  normalize(f);
  DescentResult out;
  double phi = sic_merit(f);
  out.trace.push_back(phi);
  double step = 1.0;
  CVector prev_f, prev_g;

  for (int it = 0; it < max_iters && phi > stop_merit; ++it) {
    CVector g = sic_merit_gradient(f);
    // Project onto the tangent space of the sphere at f.
    const double radial = linalg::inner(g, f).real();
    for (int k = 0; k < static_cast<int>(f.size()); ++k) g[k] -= radial * f[k];
    const double gn2 = linalg::norm_sq(g);
    if (gn2 < 1e-40) break;

    // Barzilai-Borwein trial step from the previous iterate, then backtrack.
    if (!prev_f.empty()) {
      double ss = 0.0, sy = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        const cplx ds = f[k] - prev_f[k];
        const cplx dy = g[k] - prev_g[k];
        ss += std::norm(ds);
        sy += (std::conj(ds) * dy).real();
      }
      if (sy > 0.0) step = ss / sy;
    }

    CVector trial(f.size());
    double phi_trial = phi;
    bool accepted = false;
    while (step > 1e-18) {
      for (std::size_t k = 0; k < f.size(); ++k) trial[k] = f[k] - step * g[k];
      normalize(trial);
      phi_trial = sic_merit(trial);
      if (phi_trial <= phi - kArmijo * step * gn2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    prev_f = std::move(f);
    prev_g = std::move(g);
    f = std::move(trial);
    phi = phi_trial;
    out.trace.push_back(phi);
    out.iterations = it + 1;
  }
  out.f = std::move(f);
  out.merit = phi;
  return out;
}

}  // namespace

SicCandidate search_sic_fiducial(const SearchOptions& options) {
  const int d = options.d;
  if (d < 2) throw InvalidArgument("sic search needs d >= 2");
  if (options.restarts < 1 || options.max_iters < 1) throw InvalidArgument("sic search budgets must be >= 1");
  if (!(options.tol > 0.0)) throw InvalidArgument("sic search tolerance must be positive");
  if (options.warm_start && static_cast<int>(options.warm_start->size()) != d)
    throw InvalidArgument("warm start must have d entries");

  const HeisenbergContext ctx = build_heisenberg(d);
  const double stop_merit = 1e-6 * options.tol * options.tol;
  const int threads = resolve_thread_count(options.threads);

  auto run = [&](int restart) {
    CVector start = restart == 0 && options.warm_start ? *options.warm_start : random_start(d, options.seed, restart);
    return descend(std::move(start), options.max_iters, stop_merit);
  };

  std::optional<SicCandidate> best;
  int best_restart = -1;
  double best_merit = 0.0;
  DescentResult best_result;

  auto finish = [&](SicCandidate c, const DescentResult& res, int restart, int run_count) {
    c.seed = options.seed;
    c.restart = restart;
    c.restarts_run = run_count;
    c.iterations = res.iterations;
    c.merit_trace = res.trace;
    return c;
  };

  for (int begin = 0; begin < options.restarts; begin += threads) {
    const int end = std::min(options.restarts, begin + threads);
    std::vector<std::future<DescentResult>> jobs;
    for (int i = begin; i < end; ++i) jobs.push_back(std::async(std::launch::async, run, i));
    std::vector<DescentResult> results;
    for (auto& j : jobs) results.push_back(j.get());

    for (int i = begin; i < end; ++i) {
      const DescentResult& res = results[i - begin];
      if (!best || res.merit < best_merit) {
        best_merit = res.merit;
        best_restart = i;
        best_result = res;
        best = SicCandidate{};
      }
      if (sic_quartic_residual(res.f) > options.tol) continue;
      try {
        SicCandidate c = verify_sic(ctx, res.f, options.tol);
        if (c.certified) return finish(std::move(c), res, i, i + 1);
      } catch (const ConsistencyError&) {
        // Borderline: the two criteria straddle tol. Keep searching.
      }
    }
  }

  SicCandidate c;
  try {
    c = verify_sic(ctx, best_result.f, options.tol);
  } catch (const ConsistencyError&) {
    c.d = d;
    c.fiducial = best_result.f;
    c.quartic_residual = sic_quartic_residual(best_result.f);
    c.merit = sic_merit(best_result.f);
  }
  c.certified = false;
  return finish(std::move(c), best_result, best_restart, options.restarts);
}

}  // namespace zakframe
