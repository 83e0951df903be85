#include "zakframe/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace zakframe {

namespace {

int mod(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  strides_.assign(factors_.size(), 1);
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    if (factors_[i] < 1) throw InvalidArgument("AbelianGroup: invariant factors must be >= 1");
    strides_[i] = order_;
    order_ *= factors_[i];
    exponent_ = std::lcm(exponent_, factors_[i]);
  }
}

std::vector<int> AbelianGroup::tuple(int index) const {
  if (index < 0 || index >= order_) throw InvalidArgument("AbelianGroup: element index out of range");
  std::vector<int> t(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    t[i] = index / strides_[i];
    index %= strides_[i];
  }
  return t;
}

int AbelianGroup::index(std::span<const int> tuple) const {
  if (tuple.size() != factors_.size()) throw InvalidArgument("AbelianGroup: tuple length mismatch");
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= factors_[i]) throw InvalidArgument("AbelianGroup: tuple entry out of range");
    idx += tuple[i] * strides_[i];
  }
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  std::vector<int> ta = tuple(a);
  const std::vector<int> tb = tuple(b);
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors_[i];
  return index(ta);
}

int AbelianGroup::neg(int a) const {
  std::vector<int> t = tuple(a);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (factors_[i] - t[i]) % factors_[i];
  return index(t);
}

// ------------------------------------------------------------------ characters

cplx root_of_unity(long long num, long long den) {
  long long n = ((num % den) + den) % den;
  // Exact values on the axes keep products of phases free of drift.
  if (n == 0) return {1.0, 0.0};
  if (2 * n == den) return {-1.0, 0.0};
  if (4 * n == den) return {0.0, 1.0};
  if (4 * n == 3 * den) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

int char_phase(const AbelianGroup& h_group, const Character& alpha, std::span<const int> h) {
  const auto& d = h_group.factors();
  if (alpha.exponents.size() != d.size() || h.size() != d.size())
    throw InvalidArgument("char_eval: tuple length mismatch");
  const int e = h_group.exponent();
  long long num = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (h[i] < 0 || h[i] >= d[i]) throw InvalidArgument("char_eval: element entry out of range");
    num += static_cast<long long>(mod(alpha.exponents[i], d[i])) * h[i] * (e / d[i]);
  }
  return mod(num, e);
}

cplx char_eval(const AbelianGroup& h_group, const Character& alpha, std::span<const int> h) {
  return root_of_unity(char_phase(h_group, alpha, h), h_group.exponent());
}

CharacterTable::CharacterTable(const AbelianGroup& h_group) : n_(h_group.order()) {
  phases_.resize(static_cast<std::size_t>(n_) * n_);
  values_.resize(phases_.size());
  std::vector<std::vector<int>> tuples(n_);
  for (int i = 0; i < n_; ++i) tuples[i] = h_group.tuple(i);
  for (int a = 0; a < n_; ++a) {
    const Character alpha{tuples[a]};
    for (int h = 0; h < n_; ++h) {
      const int ph = char_phase(h_group, alpha, tuples[h]);
      phases_[static_cast<std::size_t>(a) * n_ + h] = ph;
      values_[static_cast<std::size_t>(a) * n_ + h] = root_of_unity(ph, h_group.exponent());
    }
  }
}

// ----------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidArgument("group table is empty");
  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw InvalidArgument("group table is not square");
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n) throw InvalidArgument("group table entry out of range");
      if (seen[c]) throw InvalidArgument("group table is not a Latin square (row " + std::to_string(a) + ")");
      seen[c] = true;
      g.mul_[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
      const int c = g.mul(a, b);
      if (seen[c]) throw InvalidArgument("group table is not a Latin square (column " + std::to_string(b) + ")");
      seen[c] = true;
    }
  }

  g.identity_ = -1;
  for (int e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw InvalidArgument("group table has no identity");

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity_) g.inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.mul(g.inv_[a], a) != g.identity_) throw InvalidArgument("group table: left and right inverses differ");

  auto assoc = [&](int a, int b, int c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidArgument("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw InvalidArgument("group table is not associative");
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be >= 1");
  FiniteGroup g;
  g.n_ = n;
  g.identity_ = 0;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  g.inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv_[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.mul_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return g;
}

int FiniteGroup::pow(int a, int e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = identity_;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

// ------------------------------------------------------------ SubgroupEmbedding

SubgroupEmbedding::SubgroupEmbedding(const FiniteGroup& g, AbelianGroup h, std::vector<int> into)
    : h_(std::move(h)), into_(std::move(into)), back_(g.order(), -1) {
  if (static_cast<int>(into_.size()) != h_.order())
    throw InvalidArgument("subgroup embedding must list one G element per H element");
  for (int i = 0; i < h_.order(); ++i) {
    const int x = into_[i];
    if (x < 0 || x >= g.order()) throw InvalidArgument("subgroup embedding: element out of range");
    if (back_[x] >= 0) throw InvalidArgument("subgroup embedding is not injective");
    back_[x] = i;
  }
  for (int a = 0; a < h_.order(); ++a)
    for (int b = 0; b < h_.order(); ++b)
      if (into_[h_.add(a, b)] != g.mul(into_[a], into_[b]))
        throw InvalidArgument("subgroup embedding is not a homomorphism");
}

std::optional<int> SubgroupEmbedding::preimage(int x) const {
  if (x < 0 || x >= static_cast<int>(back_.size()) || back_[x] < 0) return std::nullopt;
  return back_[x];
}

// ------------------------------------------------------------------ Transversal

Transversal::Transversal(const FiniteGroup& g, const SubgroupEmbedding& emb, std::vector<int> reps)
    : reps_(std::move(reps)), coset_of_(g.order(), Factor{-1, -1}) {
  const AbelianGroup& h = emb.subgroup();
  if (static_cast<long long>(reps_.size()) * h.order() != g.order())
    throw InvalidArgument("transversal must have |G|/|H| elements");
  if (reps_.empty() || reps_[0] != g.identity()) throw InvalidArgument("transversal must start with the identity");
  for (int j = 0; j < static_cast<int>(reps_.size()); ++j) {
    for (int i = 0; i < h.order(); ++i) {
      const int x = g.mul(reps_[j], emb.into(i));
      if (coset_of_[x].rep >= 0) throw InvalidArgument("transversal meets some coset twice");
      coset_of_[x] = Factor{j, i};
    }
  }
}

Transversal Transversal::canonical(const FiniteGroup& g, const SubgroupEmbedding& emb) {
  const AbelianGroup& h = emb.subgroup();
  std::vector<bool> covered(g.order(), false);
  std::vector<int> reps{g.identity()};
  for (int i = 0; i < h.order(); ++i) covered[g.mul(g.identity(), emb.into(i))] = true;
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int i = 0; i < h.order(); ++i) covered[g.mul(x, emb.into(i))] = true;
  }
  return Transversal(g, emb, std::move(reps));
}

// ------------------------------------------------------------- InductionSetting

InductionSetting::InductionSetting(FiniteGroup g, SubgroupEmbedding emb, Transversal omega, bool is_semidirect)
    : group(std::move(g)),
      subgroup(std::move(emb)),
      transversal(std::move(omega)),
      characters(subgroup.subgroup()),
      semidirect(is_semidirect) {}

int InductionSetting::character_index(const Character& alpha) const {
  const AbelianGroup& h = subgroup.subgroup();
  if (static_cast<int>(alpha.exponents.size()) != h.rank()) throw InvalidArgument("character: tuple length mismatch");
  std::vector<int> t(alpha.exponents.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod(alpha.exponents[i], h.factors()[i]);
  return h.index(t);
}

// ------------------------------------------------------------------ semidirect

namespace {

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, int d) {
  const std::size_t m = a.size();
  IntMatrix c(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % d;
  return c;
}

IntMatrix identity_matrix(int m) {
  IntMatrix e(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) e[i][i] = 1;
  return e;
}

}  // namespace

InductionSetting build_semidirect(const SemidirectSpec& spec) {
  const int d = spec.modulus;
  const int m = spec.rank;
  if (d < 1 || m < 1) throw InvalidArgument("semidirect: modulus and rank must be >= 1");
  const FiniteGroup& k_group = spec.complement;
  const int nk = k_group.order();
  if (static_cast<int>(spec.action.size()) != nk)
    throw InvalidArgument("semidirect: need one action matrix per element of K");

  std::vector<IntMatrix> act(nk);
  for (int k = 0; k < nk; ++k) {
    if (static_cast<int>(spec.action[k].size()) != m) throw InvalidArgument("semidirect: action matrix has wrong size");
    act[k] = IntMatrix(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(spec.action[k][i].size()) != m)
        throw InvalidArgument("semidirect: action matrix has wrong size");
      for (int j = 0; j < m; ++j) act[k][i][j] = mod(spec.action[k][i][j], d);
    }
  }
  if (act[k_group.identity()] != identity_matrix(m))
    throw InvalidArgument("semidirect: identity of K must act trivially");
  for (int a = 0; a < nk; ++a)
    for (int b = 0; b < nk; ++b)
      if (mat_mul_mod(act[a], act[b], d) != act[k_group.mul(a, b)])
        throw InvalidArgument("semidirect: action is not a homomorphism K -> GL_m(Z_d)");
  // Invertibility follows from the homomorphism property; confirm anyway.
  for (int a = 0; a < nk; ++a)
    if (mat_mul_mod(act[a], act[k_group.inv(a)], d) != identity_matrix(m))
      throw InvalidArgument("semidirect: action matrix is not invertible mod d");

  const AbelianGroup h(std::vector<int>(m, d));
  const int nh = h.order();
  const int n = nh * nk;

  // Image of every H element under every action matrix.
  std::vector<int> acted(static_cast<std::size_t>(nk) * nh);
  for (int k = 0; k < nk; ++k)
    for (int x = 0; x < nh; ++x) {
      const std::vector<int> t = h.tuple(x);
      std::vector<int> r(m, 0);
      for (int i = 0; i < m; ++i) {
        long long s = 0;
        for (int j = 0; j < m; ++j) s += static_cast<long long>(act[k][i][j]) * t[j];
        r[i] = mod(s, d);
      }
      acted[static_cast<std::size_t>(k) * nh + x] = h.index(r);
    }

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const int h1 = x / nk, k1 = x % nk;
    for (int y = 0; y < n; ++y) {
      const int h2 = y / nk, k2 = y % nk;
      const int hh = h.add(h1, acted[static_cast<std::size_t>(k1) * nh + h2]);
      table[x][y] = hh * nk + k_group.mul(k1, k2);
    }
  }
  FiniteGroup g = FiniteGroup::from_table(table);

  std::vector<int> into(nh);
  for (int i = 0; i < nh; ++i) into[i] = i * nk + k_group.identity();
  SubgroupEmbedding emb(g, h, std::move(into));

  std::vector<int> reps;
  reps.reserve(nk);
  reps.push_back(k_group.identity());
  for (int k = 0; k < nk; ++k)
    if (k != k_group.identity()) reps.push_back(k);
  Transversal omega(g, emb, std::move(reps));
  return InductionSetting(std::move(g), std::move(emb), std::move(omega), true);
}

// ------------------------------------------------------------------ conjugation

Character conj_character(const InductionSetting& s, int x, const Character& alpha) {
  const AbelianGroup& h = s.subgroup.subgroup();
  const int a_idx = s.character_index(alpha);
  if (x < 0 || x >= s.group_order()) throw InvalidArgument("conj_character: element out of range");
  const int x_inv = s.group.inv(x);
  const int e = h.exponent();

  std::vector<int> beta(h.rank());
  for (int i = 0; i < h.rank(); ++i) {
    std::vector<int> gen(h.rank(), 0);
    if (h.factors()[i] == 1) {
      beta[i] = 0;
      continue;
    }
    gen[i] = 1;
    const int y = s.group.mul(s.group.mul(x_inv, s.subgroup.into(h.index(gen))), x);
    const std::optional<int> hy = s.subgroup.preimage(y);
    if (!hy) throw NotNormalError("conj_character: H is not normal (conjugate of generator " + std::to_string(i) +
                                  " by element " + std::to_string(x) + " leaves H)");
    // beta(e_i) = alpha(x^-1 e_i x) = exp(2 pi i N / e) must equal exp(2 pi i b / d_i).
    const int num = s.characters.phase(a_idx, *hy);
    const int step = e / h.factors()[i];
    if (num % step != 0) throw ConsistencyError("conj_character: conjugated character has the wrong order");
    beta[i] = num / step;
  }
  return Character{beta};
}

std::vector<int> little_group(const InductionSetting& s, const Character& alpha) {
  if (!s.semidirect) throw InvalidArgument("little_group: setting is not a semidirect product");
  const Character a{s.character(s.character_index(alpha))};
  std::vector<int> out;
  for (int k : s.transversal.reps())
    if (conj_character(s, k, a) == a) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zakframe
