#pragma once

#include <string>
#include <vector>

namespace cdscope {

/// An element of GF(p^n) in polynomial residue representation:
/// coeffs[i] is the coefficient of x^i, each in 0..p-1, size n.
struct FieldElement {
  std::vector<int> coeffs;
  bool operator==(const FieldElement& other) const = default;
};

/// GF(p^n) with a fixed irreducible modulus. The moduli are baked in per
/// supported field and re-verified irreducible at construction, so field
/// arithmetic is deterministic across runs.
struct FieldSpec {
  int p = 0;
  int n = 0;
  std::vector<int> modulus;  // monic, degree n; modulus[i] multiplies x^i

  /// Supported: every prime p with n = 1 and p <= 31, plus the extensions
  /// GF(4), GF(8), GF(9), GF(16), GF(25), GF(27), GF(32). Anything else
  /// throws ValidationError listing the supported (p, n).
  static FieldSpec make(int p, int n);

  int q() const;  // p^n

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws PreconditionError on zero.
  FieldElement inv(const FieldElement& a) const;

  /// Base-p integer encoding: sum coeffs[i] * p^i, a bijection with 0..q-1.
  int encode(const FieldElement& a) const;
  FieldElement decode(int v) const;
};

bool is_prime(int p);

}  // namespace cdscope
