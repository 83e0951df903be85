#include <doctest.h>

#include <set>

#include "zakframe/gf.hpp"

using namespace zakframe;

TEST_CASE("prime field arithmetic") {
  const FiniteField f = FiniteField::of_order(7);
  CHECK(f.mul(f.scalar(3), f.scalar(5)) == f.scalar(1));
  CHECK(f.inv(f.scalar(3)) == f.scalar(5));
  CHECK(f.add(f.scalar(4), f.scalar(5)) == f.scalar(2));
  CHECK(f.neg(f.scalar(2)) == f.scalar(5));
  CHECK_THROWS_AS(f.inv(f.zero()), InvalidArgument);
  for (const FieldElement& x : f.elements()) CHECK(f.trace(x) == f.index(x));
}

TEST_CASE("GF(27) reduction modulo x^3 + 2x + 1") {
  const FiniteField f = FiniteField::of_order(27);
  CHECK(f.spec().modulus == std::vector<int>{1, 2, 0, 1});
  const FieldElement x{{0, 1, 0}};
  const FieldElement x2{{0, 0, 1}};
  // x^3 = -2x - 1 = x + 2.
  CHECK(f.mul(x, x2) == FieldElement{{2, 1, 0}});
  CHECK(f.trace(x) == 0);
  CHECK(f.trace(f.zero()) == 0);
  std::set<int> values;
  for (const FieldElement& y : f.elements()) values.insert(f.trace(y));
  CHECK(values == std::set<int>{0, 1, 2});
}

TEST_CASE("field axioms by exhaustion on GF(27)") {
  const FiniteField f = FiniteField::of_order(27);
  const auto all = f.elements();
  REQUIRE(all.size() == 27);
  for (const FieldElement& a : all) {
    if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(f.pow(a, 27) == a);
    for (const FieldElement& b : all) {
      CHECK(f.mul(a, b) == f.mul(b, a));
      // Trace is additive.
      CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % 3);
    }
  }
}

TEST_CASE("element indexing") {
  const FiniteField f = FiniteField::of_order(27);
  for (int i = 0; i < 27; ++i) CHECK(f.index(f.element(i)) == i);
  CHECK(f.element(5) == FieldElement{{2, 1, 0}});
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (int q : {7, 11, 19, 23, 27}) {
    const FiniteField f = FiniteField::of_order(q);
    const FieldElement g = f.primitive_element();
    std::set<int> seen;
    FieldElement a = f.one();
    for (int k = 0; k < q - 1; ++k) {
      seen.insert(f.index(a));
      a = f.mul(a, g);
    }
    CHECK(seen.size() == static_cast<std::size_t>(q - 1));
  }
}

TEST_CASE("multiplication matrix acts on coefficient columns") {
  const FiniteField f = FiniteField::of_order(27);
  const FieldElement a{{1, 2, 1}};
  const auto m = f.multiplication_matrix(a);
  for (const FieldElement& y : f.elements()) {
    FieldElement prod{{0, 0, 0}};
    for (int i = 0; i < 3; ++i) {
      int acc = 0;
      for (int j = 0; j < 3; ++j) acc += m[i][j] * y.coeffs[j];
      prod.coeffs[i] = acc % 3;
    }
    CHECK(prod == f.mul(a, y));
  }
}

TEST_CASE("reducible and non-monic moduli are rejected") {
  CHECK_NOTHROW(FiniteField(FieldSpec{3, 2, {1, 0, 1}}));           // x^2 + 1, irreducible over Z_3
  CHECK_THROWS_AS(FiniteField(FieldSpec{3, 2, {2, 0, 1}}), InvalidArgument);  // x^2 - 1
  CHECK_THROWS_AS(FiniteField(FieldSpec{3, 2, {1, 0, 2}}), InvalidArgument);  // not monic
  CHECK_THROWS_AS(FiniteField(FieldSpec{4, 1, {}}), InvalidArgument);         // 4 is not prime
  // x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1) over Z_2 has no roots but factors.
  CHECK_THROWS_AS(FiniteField(FieldSpec{2, 4, {1, 0, 1, 0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteField::of_order(25), InvalidArgument);  // no default modulus
  CHECK_NOTHROW(FiniteField::of_order(343));
}

TEST_CASE("quadratic residues") {
  auto indices = [](int q) {
    const FiniteField f = FiniteField::of_order(q);
    std::vector<int> out;
    for (const FieldElement& x : quadratic_residues(f)) out.push_back(f.index(x));
    return out;
  };
  CHECK(indices(7) == std::vector<int>{1, 2, 4});
  CHECK(indices(11) == std::vector<int>{1, 3, 4, 5, 9});
  CHECK(indices(19) == std::vector<int>{1, 4, 5, 6, 7, 9, 11, 16, 17});
  CHECK(indices(23) == std::vector<int>{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18});
  const auto r7 = indices(7);
  CHECK(std::find(r7.begin(), r7.end(), 6) == r7.end());
  CHECK_THROWS_AS(quadratic_residues(FiniteField(FieldSpec{2, 2, {1, 1, 1}})), InvalidArgument);
}

TEST_CASE("difference counts") {
  const FiniteField f7 = FiniteField::of_order(7);
  const auto d7 = quadratic_residues(f7);
  CHECK(difference_count(f7, d7, f7.scalar(0)) == 3);
  CHECK(difference_count(f7, d7, f7.scalar(1)) == 1);
  const FiniteField f11 = FiniteField::of_order(11);
  CHECK(difference_count(f11, quadratic_residues(f11), f11.scalar(2)) == 2);
  const FiniteField f27 = FiniteField::of_order(27);
  const auto d27 = quadratic_residues(f27);
  for (const FieldElement& b : f27.elements()) CHECK(difference_count(f27, d27, b) == (f27.is_zero(b) ? 13 : 6));
}

TEST_CASE("prime powers") {
  CHECK(prime_power(27) == std::make_pair(3, 3));
  CHECK(prime_power(7) == std::make_pair(7, 1));
  CHECK_FALSE(prime_power(12).has_value());
  CHECK(is_prime(23));
  CHECK_FALSE(is_prime(1));
}
