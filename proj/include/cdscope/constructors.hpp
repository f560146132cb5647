#pragma once

#include <string>

#include "cdscope/field.hpp"
#include "cdscope/group.hpp"

namespace cdscope {

enum class Family { Cyclic, Dihedral, GeneralizedQuaternion, Symmetric, Alternating };

const char* family_letter(Family f);  // "C", "D", "Q", "S", "A"

/// Standard group of the given family. The parameter is the group ORDER for
/// cyclic, dihedral and generalized-quaternion families (D(8) has 8
/// elements) and the number of moved points for symmetric/alternating.
/// Dihedral and quaternion groups come with r/s generator labels; symmetric
/// and alternating groups use cycle labels.
FiniteGroup make_named(Family family, int param, const Limits& limits = {});

/// Componentwise product on pairs; pair (a, b) has index a * |G2| + b, so
/// the identity stays at index 0 and factor embeddings are index
/// arithmetic. Labels are "(la,lb)".
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           const Limits& limits = {});

/// { (a, b) : a in A, b in B } inside the product of g1 and g2.
Subgroup product_subgroup(const FiniteGroup& product, const FiniteGroup& g1,
                          const FiniteGroup& g2, const Subgroup& a,
                          const Subgroup& b);

Subgroup embed_left(const FiniteGroup& product, const FiniteGroup& g1,
                    const FiniteGroup& g2, const Subgroup& a);
Subgroup embed_right(const FiniteGroup& product, const FiniteGroup& g1,
                     const FiniteGroup& g2, const Subgroup& b);

/// All 3x3 lower unitriangular matrices over GF(p^n); order p^{3n}, center
/// of order p^n. Elements are labelled by the free entries (2,1), (3,2),
/// (3,1) in base-p integer encoding, enumerated lexicographically.
FiniteGroup heisenberg(int p, int n, const Limits& limits = {});

}  // namespace cdscope
