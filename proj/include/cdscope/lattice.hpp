#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdscope/group.hpp"

namespace cdscope {

/// All subgroups of a group, deduplicated and sorted by (order, bitset),
/// with the containment relation and its cover (Hasse) edges. Index 0 is
/// the trivial subgroup, the last index the whole group.
class SubgroupLattice {
 public:
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  const Subgroup& at(int i) const { return subs_[i]; }
  int size() const { return static_cast<int>(subs_.size()); }

  bool leq(int i, int j) const { return above_[i].test(j); }
  const Bitset& above(int i) const { return above_[i]; }  // { j : i <= j }
  const Bitset& below(int i) const { return below_[i]; }  // { j : j <= i }

  /// Cover edges (lower, upper), sorted ascending.
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  std::uint64_t group_uid() const { return group_uid_; }

  /// Index of a membership bitset, or -1 when it is not a subgroup.
  int index_of(const Bitset& members) const;

 private:
  friend SubgroupLattice enumerate_subgroups(const FiniteGroup&, const Limits&);
  std::vector<Subgroup> subs_;
  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
  std::vector<std::pair<int, int>> hasse_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
  std::uint64_t group_uid_ = 0;
};

/// Enumerate every subgroup: all cyclic subgroups first, then pairwise joins
/// iterated to a fixed point. Throws SizeError past limits.max_subgroups.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g,
                                    const Limits& limits = {});

int meet(const SubgroupLattice& l, int i, int j);
int join(const FiniteGroup& g, const SubgroupLattice& l, int i, int j);

/// A subset of lattice indices with the order inherited from the lattice.
struct PosetSelection {
  std::vector<int> indices;  // sorted ascending
  Bitset mask;               // over lattice indices

  static PosetSelection of(const SubgroupLattice& l, std::vector<int> idx);
  bool contains(int i) const { return mask.capacity() > i && mask.test(i); }
  int size() const { return static_cast<int>(indices.size()); }
  bool operator==(const PosetSelection& other) const { return mask == other.mask; }
};

PosetSelection full_selection(const SubgroupLattice& l);

/// All X with bottom <= X <= top. The endpoints must be comparable.
PosetSelection interval(const SubgroupLattice& l, int bottom, int top);

/// Unique maximum / minimum of a selection; PreconditionError if absent.
int selection_top(const SubgroupLattice& l, const PosetSelection& sel);
int selection_bottom(const SubgroupLattice& l, const PosetSelection& sel);

/// Minimal elements of sel minus its bottom / maximal minus its top.
std::vector<int> atoms(const SubgroupLattice& l, const PosetSelection& sel);
std::vector<int> coatoms(const SubgroupLattice& l, const PosetSelection& sel);

/// True when every member is the top, the bottom, or simultaneously an atom
/// and a coatom. Selections of one or two members degenerate to width 0;
/// a single-member selection is not counted as a quasi-antichain.
struct QuasiAntichain {
  bool is_qa = false;
  int width = 0;
};
QuasiAntichain quasi_antichain(const SubgroupLattice& l,
                               const PosetSelection& sel);
bool is_quasi_antichain(const SubgroupLattice& l, const PosetSelection& sel);

/// True iff the chain K_0 = G, K_{t+1} = normal closure of H in K_t
/// descends to H.
bool is_subnormal(const FiniteGroup& g, const SubgroupLattice& l, int i);

/// Computed from the upper central series Z_0 = 1, Z_{t+1}/Z_t = Z(G/Z_t);
/// nilpotent iff the series reaches G, and then `nclass` is its length.
struct NilpotencyInfo {
  bool nilpotent = false;
  std::optional<int> nclass;
  std::vector<Subgroup> upper_central_series;  // Z_0, Z_1, ...
};
NilpotencyInfo nilpotency(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

}  // namespace cdscope
