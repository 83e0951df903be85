#pragma once

// Finite groups G with a distinguished abelian subgroup H, characters of H,
// a transversal for G/H, semidirect products H x| K and the conjugation
// action of G on the characters of a normal H.

#include <optional>
#include <span>
#include <vector>

#include "zakframe/types.hpp"

namespace zakframe {

/// H = Z_{d_1} x ... x Z_{d_k}. Elements are tuples enumerated row-major,
/// so the last coordinate varies fastest.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }
  /// Least common multiple of the invariant factors.
  int exponent() const { return exponent_; }

  std::vector<int> tuple(int index) const;
  int index(std::span<const int> tuple) const;

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
  int exponent_ = 1;
};

/// alpha_a(h) = exp(2 pi i sum_i a_i h_i / d_i). Characters of H are indexed
/// exactly like the elements of H (the exponent tuple's row-major index).
struct Character {
  std::vector<int> exponents;

  bool operator==(const Character&) const = default;
};

/// Returns numerator N in [0, exponent) with alpha(h) = exp(2 pi i N / exponent).
int char_phase(const AbelianGroup& h_group, const Character& alpha, std::span<const int> h);
cplx char_eval(const AbelianGroup& h_group, const Character& alpha, std::span<const int> h);
/// exp(2 pi i num / den), reduced so that exact multiples of a quarter turn are exact.
cplx root_of_unity(long long num, long long den);

/// Table of alpha(h) for every character index alpha and element index h.
class CharacterTable {
 public:
  explicit CharacterTable(const AbelianGroup& h_group);

  int size() const { return n_; }
  cplx operator()(int alpha, int h) const { return values_[static_cast<std::size_t>(alpha) * n_ + h]; }
  /// Integer phase numerator over the group exponent.
  int phase(int alpha, int h) const { return phases_[static_cast<std::size_t>(alpha) * n_ + h]; }

 private:
  int n_ = 0;
  std::vector<int> phases_;
  std::vector<cplx> values_;
};

/// Finite group given by its Cayley table. Elements are 0..order-1.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, two-sided identity, associativity
  /// (every triple up to order 64, 10^4 sampled triples above that).
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  /// Cyclic group Z_n with element k standing for g^k.
  static FiniteGroup cyclic(int n);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, int e) const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

/// Injective homomorphism H -> G.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(const FiniteGroup& g, AbelianGroup h, std::vector<int> into);

  const AbelianGroup& subgroup() const { return h_; }
  int into(int h) const { return into_[h]; }
  /// Index in H of the G element x, if x lies in the image.
  std::optional<int> preimage(int x) const;

 private:
  AbelianGroup h_;
  std::vector<int> into_;
  std::vector<int> back_;  // -1 off the image
};

/// One representative per left coset xH, reps[0] the identity. Every x in G
/// factors uniquely as x = reps[rep] * into(h).
class Transversal {
 public:
  struct Factor {
    int rep;
    int h;
  };

  Transversal(const FiniteGroup& g, const SubgroupEmbedding& emb, std::vector<int> reps);
  /// Least element of every coset, in increasing order, identity moved first.
  static Transversal canonical(const FiniteGroup& g, const SubgroupEmbedding& emb);

  int size() const { return static_cast<int>(reps_.size()); }
  const std::vector<int>& reps() const { return reps_; }
  int rep(int j) const { return reps_[j]; }
  Factor coset_of(int x) const { return coset_of_[x]; }

 private:
  std::vector<int> reps_;
  std::vector<Factor> coset_of_;
};

/// G together with its abelian subgroup H and a transversal for G/H. When G
/// was built as a semidirect product the transversal is the complement K.
struct InductionSetting {
  FiniteGroup group;
  SubgroupEmbedding subgroup;
  Transversal transversal;
  CharacterTable characters;
  bool semidirect = false;

  InductionSetting(FiniteGroup g, SubgroupEmbedding emb, Transversal omega, bool is_semidirect = false);

  int group_order() const { return group.order(); }
  int subgroup_order() const { return subgroup.subgroup().order(); }
  int num_characters() const { return subgroup.subgroup().order(); }
  int transversal_size() const { return transversal.size(); }

  Character character(int index) const { return Character{subgroup.subgroup().tuple(index)}; }
  int character_index(const Character& alpha) const;
};

/// Integer m x m matrix with entries mod d, row-major.
using IntMatrix = std::vector<std::vector<int>>;

/// G = Z_d^m x| K with k acting on H through action[k] (mod modulus).
struct SemidirectSpec {
  int modulus = 2;
  int rank = 1;
  FiniteGroup complement = FiniteGroup::cyclic(1);
  std::vector<IntMatrix> action;
};

/// Element (h, k) gets index h_index * |K| + k and multiplies as
/// (h1, k1)(h2, k2) = (h1 + action(k1) h2, k1 k2). The transversal is K.
InductionSetting build_semidirect(const SemidirectSpec& spec);

/// beta with beta(h) = alpha(x^-1 h x). Throws NotNormalError when some
/// conjugate of a generator of H leaves H.
Character conj_character(const InductionSetting& s, int x, const Character& alpha);

/// Elements k of the complement K (as G indices) with k . alpha = alpha.
std::vector<int> little_group(const InductionSetting& s, const Character& alpha);

}  // namespace zakframe
