#include "cdscope/field.hpp"

#include <algorithm>
#include <sstream>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

// (p, n) -> modulus coefficients, constant term first
struct BakedModulus {
  int p;
  int n;
  std::vector<int> modulus;
};

const std::vector<BakedModulus>& baked_moduli() {
  static const std::vector<BakedModulus> table = {
      {2, 2, {1, 1, 1}},        // x^2 + x + 1
      {2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
      {3, 2, {1, 0, 1}},        // x^2 + 1
      {2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {5, 2, {2, 0, 1}},        // x^2 + 2
      {3, 3, {1, 2, 0, 1}},     // x^3 + 2x + 1
      {2, 5, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
  };
  return table;
}

std::string supported_fields_list() {
  std::ostringstream os;
  os << "GF(p) for primes p <= 31, GF(4), GF(8), GF(9), GF(16), GF(25), "
        "GF(27), GF(32)";
  return os.str();
}

// polynomial ops over GF(p), coefficient vectors with constant term first
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

int poly_degree(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// remainder of a modulo monic m
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    int factor = a[da];
    for (int i = 0; i <= dm; ++i) {
      int idx = da - dm + i;
      a[idx] = ((a[idx] - factor * m[i]) % p + p) % p;
    }
  }
  a.resize(dm > 0 ? dm : 1, 0);
  return a;
}

bool divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
  auto r = poly_rem(a, d, p);
  return poly_degree(r) < 0;
}

// exhaustive search for a monic factor of degree 1..n-1
bool is_irreducible(const std::vector<int>& m, int p) {
  const int n = poly_degree(m);
  if (n <= 0) return false;
  if (n == 1) return true;
  for (int d = 1; d < n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> cand(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(c % p);
        c /= p;
      }
      cand[d] = 1;
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::make(int p, int n) {
  std::ostringstream err;
  if (!is_prime(p) || n < 1) {
    err << "GF(" << p << "^" << n << ") is not a valid field; supported: "
        << supported_fields_list();
    throw ValidationError(err.str());
  }
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  if (q > 32) {
    err << "GF(" << p << "^" << n << ") = GF(" << q
        << ") is outside the supported table; supported: "
        << supported_fields_list();
    throw ValidationError(err.str());
  }

  FieldSpec spec;
  spec.p = p;
  spec.n = n;
  if (n == 1) {
    spec.modulus = {0, 1};  // x
  } else {
    bool found = false;
    for (const auto& bm : baked_moduli()) {
      if (bm.p == p && bm.n == n) {
        spec.modulus = bm.modulus;
        found = true;
        break;
      }
    }
    if (!found) {
      err << "no baked modulus for GF(" << p << "^" << n
          << "); supported: " << supported_fields_list();
      throw ValidationError(err.str());
    }
  }

  if (spec.modulus.back() != 1)
    throw ValidationError("field modulus must be monic");
  if (poly_degree(spec.modulus) != n)
    throw ValidationError("field modulus has wrong degree");
  if (!is_irreducible(spec.modulus, p))
    throw ValidationError("field modulus is reducible");
  return spec;
}

int FieldSpec::q() const {
  int r = 1;
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

FieldElement FieldSpec::zero() const { return FieldElement{std::vector<int>(n, 0)}; }

FieldElement FieldSpec::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1 % p;
  return e;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (int i = 0; i < n; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p;
  return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
  FieldElement r = zero();
  for (int i = 0; i < n; ++i) r.coeffs[i] = (p - a.coeffs[i]) % p;
  return r;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  auto prod = poly_mul(a.coeffs, b.coeffs, p);
  auto rem = poly_rem(std::move(prod), modulus, p);
  rem.resize(n, 0);
  return FieldElement{std::move(rem)};
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  if (a == zero()) throw PreconditionError("field inverse of zero");
  // q <= 32: scan
  for (int v = 1; v < q(); ++v) {
    FieldElement cand = decode(v);
    if (mul(a, cand) == one()) return cand;
  }
  throw TheoremViolation("field element without inverse (reducible modulus?)");
}

int FieldSpec::encode(const FieldElement& a) const {
  int v = 0;
  for (int i = n - 1; i >= 0; --i) v = v * p + a.coeffs[i];
  return v;
}

FieldElement FieldSpec::decode(int v) const {
  FieldElement e = zero();
  for (int i = 0; i < n; ++i) {
    e.coeffs[i] = v % p;
    v /= p;
  }
  return e;
}

}  // namespace cdscope
