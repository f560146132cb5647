#include "cdscope/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

// greedy generating set, used to keep joins cheap
std::vector<int> small_generators(const FiniteGroup& g, const Bitset& members) {
  std::vector<int> gens;
  Bitset closed(g.order());
  closed.set(g.identity());
  int closed_count = 1;
  const int total = members.count();
  for (int x = members.first(); x >= 0 && closed_count < total;
       x = members.next(x + 1)) {
    if (closed.test(x)) continue;
    gens.push_back(x);
    Bitset gb(g.order());
    for (int t : gens) gb.set(t);
    Subgroup s = generated_subgroup(g, gb);
    closed = s.members;
    closed_count = s.order;
  }
  return gens;
}

}  // namespace

int SubgroupLattice::index_of(const Bitset& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const Limits& limits) {
  struct Entry {
    Bitset members;
    std::vector<int> gens;
  };
  std::vector<Entry> all;
  std::unordered_set<Bitset, BitsetHash> seen;

  auto add = [&](Bitset members, std::vector<int> gens) -> bool {
    if (seen.count(members)) return false;
    seen.insert(members);
    all.push_back(Entry{std::move(members), std::move(gens)});
    if (all.size() > limits.max_subgroups) {
      std::ostringstream os;
      os << "subgroup enumeration exceeded the cap of " << limits.max_subgroups
         << " subgroups";
      throw SizeError(os.str());
    }
    return true;
  };

  // cyclic subgroups seed the closure
  for (int x = 0; x < g.order(); ++x) {
    Subgroup c = cyclic_subgroup(g, x);
    std::vector<int> gens;
    if (x != g.identity()) gens.push_back(x);
    add(std::move(c.members), std::move(gens));
  }

  // pairwise joins to a fixed point; pair (i, j) is joined once, when the
  // later of the two is processed
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (all[j].members.subset_of(all[i].members) ||
          all[i].members.subset_of(all[j].members))
        continue;
      Bitset gb(g.order());
      for (int t : all[i].gens) gb.set(t);
      for (int t : all[j].gens) gb.set(t);
      Subgroup joined = generated_subgroup(g, gb);
      if (!seen.count(joined.members)) {
        std::vector<int> gens = small_generators(g, joined.members);
        add(std::move(joined.members), std::move(gens));
      }
    }
  }

  SubgroupLattice l;
  l.group_uid_ = g.uid();
  l.subs_.reserve(all.size());
  for (auto& e : all) {
    int order = e.members.count();
    l.subs_.push_back(Subgroup{std::move(e.members), order, g.uid()});
  }
  std::sort(l.subs_.begin(), l.subs_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return Bitset::lex_less(a.members, b.members);
  });

  const int k = static_cast<int>(l.subs_.size());
  for (int i = 0; i < k; ++i) l.index_[l.subs_[i].members] = i;

  l.above_.assign(k, Bitset(k));
  l.below_.assign(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (l.subs_[i].members.subset_of(l.subs_[j].members)) {
        l.above_[i].set(j);
        l.below_[j].set(i);
      }

  // covers: i < j with nothing strictly between, i.e. |[i, j]| == 2
  for (int j = 0; j < k; ++j) {
    for (int i = l.below_[j].first(); i >= 0; i = l.below_[j].next(i + 1)) {
      if (i == j) continue;
      if ((l.above_[i] & l.below_[j]).count() == 2) l.hasse_.emplace_back(i, j);
    }
  }
  std::sort(l.hasse_.begin(), l.hasse_.end());
  return l;
}

int meet(const SubgroupLattice& l, int i, int j) {
  Bitset m = l.at(i).members & l.at(j).members;
  int idx = l.index_of(m);
  if (idx < 0)
    throw TheoremViolation("meet of two subgroups is missing from the lattice");
  return idx;
}

int join(const FiniteGroup& g, const SubgroupLattice& l, int i, int j) {
  if (l.group_uid() != g.uid())
    throw PreconditionError("join: lattice does not belong to this group");
  Subgroup s = generated_subgroup(g, l.at(i).members | l.at(j).members);
  int idx = l.index_of(s.members);
  if (idx < 0)
    throw TheoremViolation("join of two subgroups is missing from the lattice");
  return idx;
}

PosetSelection PosetSelection::of(const SubgroupLattice& l, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  PosetSelection sel;
  sel.mask = Bitset(l.size());
  for (int i : idx) {
    if (i < 0 || i >= l.size())
      throw PreconditionError("poset selection index out of range");
    sel.mask.set(i);
  }
  sel.indices = std::move(idx);
  return sel;
}

PosetSelection full_selection(const SubgroupLattice& l) {
  std::vector<int> idx(l.size());
  for (int i = 0; i < l.size(); ++i) idx[i] = i;
  return PosetSelection::of(l, std::move(idx));
}

PosetSelection interval(const SubgroupLattice& l, int bottom, int top) {
  if (bottom < 0 || bottom >= l.size() || top < 0 || top >= l.size())
    throw PreconditionError("interval endpoints out of range");
  if (!l.leq(bottom, top))
    throw PreconditionError("interval endpoints are not comparable");
  std::vector<int> idx;
  for (int i = 0; i < l.size(); ++i)
    if (l.leq(bottom, i) && l.leq(i, top)) idx.push_back(i);
  return PosetSelection::of(l, std::move(idx));
}

int selection_top(const SubgroupLattice& l, const PosetSelection& sel) {
  if (sel.indices.empty())
    throw PreconditionError("empty selection has no top");
  int best = -1;
  for (int i : sel.indices) {
    bool is_max = true;
    for (int j : sel.indices)
      if (j != i && l.leq(i, j)) {
        is_max = false;
        break;
      }
    if (is_max) {
      if (best >= 0) throw PreconditionError("selection has no unique top");
      best = i;
    }
  }
  // maximality of every chain end guarantees best >= 0 here
  for (int j : sel.indices)
    if (!l.leq(j, best))
      throw PreconditionError("selection has no unique top");
  return best;
}

int selection_bottom(const SubgroupLattice& l, const PosetSelection& sel) {
  if (sel.indices.empty())
    throw PreconditionError("empty selection has no bottom");
  int best = -1;
  for (int i : sel.indices) {
    bool is_min = true;
    for (int j : sel.indices)
      if (j != i && l.leq(j, i)) {
        is_min = false;
        break;
      }
    if (is_min) {
      if (best >= 0) throw PreconditionError("selection has no unique bottom");
      best = i;
    }
  }
  for (int j : sel.indices)
    if (!l.leq(best, j))
      throw PreconditionError("selection has no unique bottom");
  return best;
}

std::vector<int> atoms(const SubgroupLattice& l, const PosetSelection& sel) {
  int bot = selection_bottom(l, sel);
  (void)selection_top(l, sel);
  std::vector<int> result;
  for (int i : sel.indices) {
    if (i == bot) continue;
    bool minimal = true;
    for (int j : sel.indices)
      if (j != bot && j != i && l.leq(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(i);
  }
  return result;
}

std::vector<int> coatoms(const SubgroupLattice& l, const PosetSelection& sel) {
  int top = selection_top(l, sel);
  (void)selection_bottom(l, sel);
  std::vector<int> result;
  for (int i : sel.indices) {
    if (i == top) continue;
    bool maximal = true;
    for (int j : sel.indices)
      if (j != top && j != i && l.leq(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) result.push_back(i);
  }
  return result;
}

QuasiAntichain quasi_antichain(const SubgroupLattice& l,
                               const PosetSelection& sel) {
  int top = selection_top(l, sel);
  int bot = selection_bottom(l, sel);
  QuasiAntichain qa;
  if (top == bot) return qa;  // single member: not a quasi-antichain
  if (sel.size() == 2) {
    qa.is_qa = true;  // degenerate: just top and bottom
    qa.width = 0;
    return qa;
  }
  auto at = atoms(l, sel);
  auto co = coatoms(l, sel);
  Bitset atom_mask(l.size()), coatom_mask(l.size());
  for (int i : at) atom_mask.set(i);
  for (int i : co) coatom_mask.set(i);
  for (int i : sel.indices) {
    if (i == top || i == bot) continue;
    if (!atom_mask.test(i) || !coatom_mask.test(i)) return qa;
  }
  qa.is_qa = true;
  qa.width = static_cast<int>(at.size());
  return qa;
}

bool is_quasi_antichain(const SubgroupLattice& l, const PosetSelection& sel) {
  return quasi_antichain(l, sel).is_qa;
}

bool is_subnormal(const FiniteGroup& g, const SubgroupLattice& l, int i) {
  if (l.group_uid() != g.uid())
    throw PreconditionError("is_subnormal: lattice does not belong to this group");
  if (i < 0 || i >= l.size())
    throw PreconditionError("is_subnormal: index out of range");
  const Subgroup& h = l.at(i);
  Subgroup k = whole_group(g);
  while (true) {
    if (k.members == h.members) return true;
    Subgroup next = normal_closure(g, h, k);
    if (next.members == k.members) return false;
    k = std::move(next);
  }
}

NilpotencyInfo nilpotency(const FiniteGroup& g) {
  NilpotencyInfo info;
  Subgroup z = trivial_subgroup(g);
  info.upper_central_series.push_back(z);
  int cls = 0;
  while (true) {
    if (z.order == g.order()) {
      info.nilpotent = true;
      info.nclass = cls;
      return info;
    }
    // next term: x with [x, g] inside the current term, for all g
    Bitset next(g.order());
    int count = 0;
    for (int x = 0; x < g.order(); ++x) {
      bool central_mod = true;
      for (int y = 0; y < g.order(); ++y) {
        if (!z.members.test(g.commutator(x, y))) {
          central_mod = false;
          break;
        }
      }
      if (central_mod) {
        next.set(x);
        ++count;
      }
    }
    if (count == z.order) return info;  // series stalled: not nilpotent
    z = Subgroup{std::move(next), count, g.uid()};
    info.upper_central_series.push_back(z);
    ++cls;
  }
}

bool is_nilpotent(const FiniteGroup& g) { return nilpotency(g).nilpotent; }

}  // namespace cdscope
