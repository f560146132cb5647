#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdscope/bitset.hpp"
#include "cdscope/perm.hpp"

namespace cdscope {

/// Resource caps threaded through constructors and enumeration.
struct Limits {
  int max_order = 2000;             // largest group order we materialize
  int max_points = 16;              // permutation degree cap
  std::size_t max_subgroups = 100000;
  long long corpus_order_budget = 1000000;  // sum of predicted orders
};

/// A finite group as an immutable multiplication table with labelled
/// elements. Element 0 is always the identity for groups built by this
/// library; the index is recomputed and checked at construction regardless.
class FiniteGroup {
 public:
  /// `mul` is row-major, n*n, entries in 0..n-1. Inverses are derived from
  /// the table; a missing unit or inverse is a ValidationError, as are
  /// duplicate labels. Associativity is not checked here (see
  /// check_group_axioms).
  FiniteGroup(std::string name, int n, std::vector<int> mul,
              std::vector<std::string> labels);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  std::uint64_t uid() const { return uid_; }

  int element_order(int x) const;

  /// x^k for k >= 0.
  int power(int x, int k) const;

  /// x^{-1} y^{-1} x y
  int commutator(int x, int y) const;

 private:
  std::uint64_t uid_;
  int n_;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// A subgroup as a bitset of element indices plus its cached order.
struct Subgroup {
  Bitset members;
  int order = 0;
  std::uint64_t group_uid = 0;

  bool contains(int i) const { return members.test(i); }
  bool operator==(const Subgroup& other) const {
    return group_uid == other.group_uid && members == other.members;
  }
};

/// Exhaustive axiom check (associativity, unit, inverses); O(n^3), intended
/// for tests on desk-scale groups. Returns false and fills `why` on failure.
bool check_group_axioms(const FiniteGroup& g, std::string* why = nullptr);

/// Group generated by permutations, elements enumerated breadth-first from
/// the identity with the generator list applied in sorted order. Throws
/// SizeError when the closure exceeds limits.max_order and ValidationError
/// for malformed generators.
FiniteGroup close_generators(const std::vector<Permutation>& gens,
                             const Limits& limits = {},
                             const std::string& name = "");

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Wrap a membership bitset, verifying closure under product and inverse.
Subgroup subgroup_from_members(const FiniteGroup& g, const Bitset& members);

/// Subgroup generated by the set bits of `gens` (word closure).
Subgroup generated_subgroup(const FiniteGroup& g, const Bitset& gens);

Subgroup cyclic_subgroup(const FiniteGroup& g, int x);

/// { g : gs = sg for all s in S }. Empty S yields the whole group.
Subgroup centralizer(const FiniteGroup& g, const Bitset& s);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer_of_element(const FiniteGroup& g, int x);

Subgroup center(const FiniteGroup& g);

/// Smallest subgroup of K containing H and normal in K. Requires H <= K.
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h,
                        const Subgroup& k);

/// Subgroup generated by all commutators x^{-1}y^{-1}xy.
Subgroup derived_subgroup(const FiniteGroup& g);

/// Subgroup generated by { [a,g] : g in G }.
Subgroup commutator_with_group(const FiniteGroup& g, int a);

bool is_abelian(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Materialize a subgroup as a standalone group. Elements keep their ambient
/// relative order, so the identity stays at index 0.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                              const std::string& name);

}  // namespace cdscope
