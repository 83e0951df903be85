#pragma once

// Arithmetic in GF(p^r) using a polynomial basis over Z_p.

#include <optional>
#include <span>
#include <vector>

#include "zakframe/types.hpp"

namespace zakframe {

/// modulus holds the r+1 coefficients of a monic irreducible polynomial,
/// constant term first. It is ignored (and may be empty) when degree == 1.
struct FieldSpec {
  int p = 2;
  int degree = 1;
  std::vector<int> modulus;
};

/// Coefficients c_0..c_{r-1} of c_0 + c_1 x + ... , each in [0, p).
struct FieldElement {
  std::vector<int> coeffs;

  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;
};

class FiniteField {
 public:
  /// Checks p prime and the modulus monic and irreducible (Rabin's test).
  explicit FiniteField(FieldSpec spec);

  /// Field of order q. Prime q needs no modulus; 27 and 343 fall back to the
  /// shipped defaults x^3 + 2x + 1 and x^3 + 5. Other prime powers need one.
  static FiniteField of_order(int q, std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.degree; }
  int order() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The prime-subfield element n mod p.
  FieldElement scalar(long long n) const;
  /// Element with index sum_i c_i p^i (constant term is the least significant digit).
  FieldElement element(int index) const;
  int index(const FieldElement& x) const;
  std::vector<FieldElement> elements() const;
  bool is_zero(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  /// Throws InvalidArgument on zero.
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, long long e) const;

  /// tr(x) = x + x^p + ... + x^{p^{r-1}}, returned as an integer in [0, p).
  int trace(const FieldElement& x) const;

  /// A generator of the multiplicative group, least by index.
  FieldElement primitive_element() const;

  /// r x r matrix over Z_p of y -> a y in the polynomial basis (column j is a x^j).
  std::vector<std::vector<int>> multiplication_matrix(const FieldElement& a) const;

 private:
  void check(const FieldElement& x) const;

  FieldSpec spec_;
  int q_ = 0;
};

/// {x^2 : x != 0}, sorted by element index. Throws for even q.
std::vector<FieldElement> quadratic_residues(const FiniteField& field);

/// |{c in D : c - b in D}|.
int difference_count(const FiniteField& field, std::span<const FieldElement> d_set, const FieldElement& b);

bool is_prime(long long n);

/// (p, r) with q = p^r, or nullopt if q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

}  // namespace zakframe
