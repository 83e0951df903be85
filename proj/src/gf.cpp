#include "zakframe/gf.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace zakframe {

namespace {

using Poly = std::vector<int>;  // constant term first, over Z_p

int modp(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp(a[i] - b[i], p);
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo m (m nonzero, any leading coefficient).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = static_cast<int>(powmod(m.back(), p - 2, p));
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = modp(a[shift + i] - c * m[i], p);
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, long long e, const Poly& m, int p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// x^(p^k) mod m by repeated Frobenius.
Poly frobenius_power(int k, const Poly& m, int p) {
  Poly x{0, 1};
  for (int i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
  return x;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin: m of degree r is irreducible over Z_p iff x^(p^r) = x mod m and
// gcd(x^(p^(r/l)) - x, m) = 1 for every prime l | r.
bool is_irreducible(const Poly& m, int p) {
  const int r = static_cast<int>(m.size()) - 1;
  if (r < 1) return false;
  if (r == 1) return true;
  const Poly x{0, 1};
  if (!poly_sub(frobenius_power(r, m, p), x, p).empty()) return false;
  for (int l : prime_factors(r)) {
    const Poly g = poly_gcd(m, poly_sub(frobenius_power(r / l, m, p), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  const std::vector<int> f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  int r = 0;
  for (int n = q; n > 1; n /= f[0]) ++r;
  return std::make_pair(f[0], r);
}

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw InvalidArgument("field characteristic " + std::to_string(spec_.p) + " is not prime");
  if (spec_.degree < 1) throw InvalidArgument("field extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < spec_.degree; ++i) q_ *= spec_.p;
  if (spec_.degree == 1) {
    spec_.modulus = {0, 1};
    return;
  }
  if (static_cast<int>(spec_.modulus.size()) != spec_.degree + 1)
    throw InvalidArgument("field modulus must have degree+1 coefficients");
  for (int& c : spec_.modulus) c = modp(c, spec_.p);
  if (spec_.modulus.back() != 1) throw InvalidArgument("field modulus must be monic");
  if (!is_irreducible(spec_.modulus, spec_.p)) throw InvalidArgument("field modulus is not irreducible over Z_p");
}

FiniteField FiniteField::of_order(int q, std::optional<std::vector<int>> modulus) {
  const auto pr = prime_power(q);
  if (!pr) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  const auto [p, r] = *pr;
  if (r == 1) return FiniteField(FieldSpec{p, 1, {}});
  if (!modulus) {
    if (q == 27) modulus = std::vector<int>{1, 2, 0, 1};
    else if (q == 343) modulus = std::vector<int>{5, 0, 0, 1};
    else throw InvalidArgument("GF(" + std::to_string(q) + ") needs an explicit modulus polynomial");
  }
  return FiniteField(FieldSpec{p, r, *modulus});
}

void FiniteField::check(const FieldElement& x) const {
  if (static_cast<int>(x.coeffs.size()) != spec_.degree) throw InvalidArgument("field element has wrong length");
  for (int c : x.coeffs)
    if (c < 0 || c >= spec_.p) throw InvalidArgument("field element coefficient out of range");
}

FieldElement FiniteField::zero() const { return FieldElement{std::vector<int>(spec_.degree, 0)}; }

FieldElement FiniteField::one() const { return scalar(1); }

FieldElement FiniteField::scalar(long long n) const {
  FieldElement e = zero();
  e.coeffs[0] = modp(n, spec_.p);
  return e;
}

FieldElement FiniteField::element(int index) const {
  if (index < 0 || index >= q_) throw InvalidArgument("field element index out of range");
  FieldElement e = zero();
  for (int i = 0; i < spec_.degree; ++i) {
    e.coeffs[i] = index % spec_.p;
    index /= spec_.p;
  }
  return e;
}

int FiniteField::index(const FieldElement& x) const {
  check(x);
  int idx = 0;
  for (int i = spec_.degree - 1; i >= 0; --i) idx = idx * spec_.p + x.coeffs[i];
  return idx;
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (int i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

bool FiniteField::is_zero(const FieldElement& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](int c) { return c == 0; });
}

FieldElement FiniteField::add(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  FieldElement z = zero();
  for (int i = 0; i < spec_.degree; ++i) z.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % spec_.p;
  return z;
}

FieldElement FiniteField::neg(const FieldElement& x) const {
  check(x);
  FieldElement z = zero();
  for (int i = 0; i < spec_.degree; ++i) z.coeffs[i] = (spec_.p - x.coeffs[i]) % spec_.p;
  return z;
}

FieldElement FiniteField::sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }

FieldElement FiniteField::mul(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  const int p = spec_.p;
  if (spec_.degree == 1) return FieldElement{{x.coeffs[0] * y.coeffs[0] % p}};
  Poly r = poly_mod(poly_mul(x.coeffs, y.coeffs, p), spec_.modulus, p);
  r.resize(spec_.degree, 0);
  return FieldElement{std::move(r)};
}

FieldElement FiniteField::pow(const FieldElement& x, long long e) const {
  if (e < 0) return pow(inv(x), -e);
  FieldElement r = one();
  FieldElement b = x;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElement FiniteField::inv(const FieldElement& x) const {
  check(x);
  if (is_zero(x)) throw InvalidArgument("inversion of zero in GF(" + std::to_string(q_) + ")");
  if (spec_.degree == 1) return scalar(powmod(x.coeffs[0], spec_.p - 2, spec_.p));
  return pow(x, q_ - 2);
}

int FiniteField::trace(const FieldElement& x) const {
  FieldElement s = zero();
  FieldElement t = x;
  for (int k = 0; k < spec_.degree; ++k) {
    s = add(s, t);
    t = pow(t, spec_.p);
  }
  for (int i = 1; i < spec_.degree; ++i)
    if (s.coeffs[i] != 0) throw ConsistencyError("trace left the prime subfield");
  return s.coeffs[0];
}

FieldElement FiniteField::primitive_element() const {
  const std::vector<int> f = prime_factors(q_ - 1);
  for (int i = 1; i < q_; ++i) {
    const FieldElement g = element(i);
    bool ok = true;
    for (int l : f)
      if (pow(g, (q_ - 1) / l) == one()) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw ConsistencyError("no primitive element found");
}

std::vector<std::vector<int>> FiniteField::multiplication_matrix(const FieldElement& a) const {
  const int r = spec_.degree;
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  for (int j = 0; j < r; ++j) {
    FieldElement basis = zero();
    basis.coeffs[j] = 1;
    const FieldElement col = mul(a, basis);
    for (int i = 0; i < r; ++i) m[i][j] = col.coeffs[i];
  }
  return m;
}

std::vector<FieldElement> quadratic_residues(const FiniteField& field) {
  if (field.order() % 2 == 0) throw InvalidArgument("quadratic residues need odd q");
  std::set<int> idx;
  for (int i = 1; i < field.order(); ++i) {
    const FieldElement x = field.element(i);
    idx.insert(field.index(field.mul(x, x)));
  }
  std::vector<FieldElement> out;
  for (int i : idx) out.push_back(field.element(i));
  return out;
}

int difference_count(const FiniteField& field, std::span<const FieldElement> d_set, const FieldElement& b) {
  std::vector<bool> in(field.order(), false);
  for (const FieldElement& c : d_set) in[field.index(c)] = true;
  int count = 0;
  for (const FieldElement& c : d_set)
    if (in[field.index(field.sub(c, b))]) ++count;
  return count;
}

}  // namespace zakframe
