#include "cdscope/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

void require_lattice(const FiniteGroup& g, const SubgroupLattice& l) {
  if (l.group_uid() != g.uid())
    throw PreconditionError("lattice does not belong to this group");
}

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// |G| = p^a for a single prime p (order > 1), else nullopt
std::optional<std::pair<int, int>> prime_power(long long order) {
  if (order < 2) return std::nullopt;
  for (int p = 2; static_cast<long long>(p) * p <= order; ++p) {
    if (order % p == 0) {
      int a = 0;
      while (order % p == 0) {
        order /= p;
        ++a;
      }
      if (order != 1) return std::nullopt;
      return std::make_pair(p, a);
    }
  }
  return std::make_pair(static_cast<int>(order), 1);  // order itself prime
}

std::vector<int> prime_divisors(int order) {
  std::vector<int> primes;
  int rest = order;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  return primes;
}

}  // namespace

MeasureMap measure_map(const FiniteGroup& g, const SubgroupLattice& l) {
  require_lattice(g, l);
  MeasureMap m;
  const int k = l.size();
  m.values.resize(k);
  m.centralizer_index.resize(k);
  std::map<long long, std::vector<int>> fibers;
  for (int i = 0; i < k; ++i) {
    Subgroup c = centralizer(g, l.at(i).members);
    int ci = l.index_of(c.members);
    if (ci < 0)
      throw TheoremViolation("centralizer of a subgroup missing from the lattice");
    m.centralizer_index[i] = ci;
    m.values[i] = static_cast<long long>(l.at(i).order) * c.order;
    fibers[m.values[i]].push_back(i);
  }
  for (auto& [value, members] : fibers) {
    m.image.push_back(value);
    m.fibers.emplace_back(value, std::move(members));
  }
  m.max_value = m.image.back();
  return m;
}

PosetSelection cd_lattice(const FiniteGroup& g, const SubgroupLattice& l,
                          const MeasureMap& m) {
  require_lattice(g, l);
  std::vector<int> idx;
  for (int i = 0; i < l.size(); ++i)
    if (m.values[i] == m.max_value) idx.push_back(i);
  PosetSelection sel = PosetSelection::of(l, std::move(idx));

  // closure under meet and join is a theorem; failure means a kernel bug
  for (int i : sel.indices)
    for (int j : sel.indices) {
      if (j <= i) continue;
      if (!sel.contains(meet(l, i, j)))
        throw TheoremViolation("CD lattice not closed under intersection");
      if (!sel.contains(join(g, l, i, j)))
        throw TheoremViolation("CD lattice not closed under join");
    }
  return sel;
}

CentralizerLattice centralizer_lattice(const FiniteGroup& g,
                                       const SubgroupLattice& l,
                                       const MeasureMap& m) {
  require_lattice(g, l);
  std::vector<int> idx(m.centralizer_index);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  CentralizerLattice cl;
  cl.sel = PosetSelection::of(l, std::move(idx));
  cl.dual.reserve(cl.sel.indices.size());
  for (int i : cl.sel.indices) cl.dual.push_back(m.centralizer_index[i]);
  return cl;
}

MonotoneResult is_monotone_on(const MeasureMap& m, const SubgroupLattice& l,
                              const PosetSelection& sel, Direction dir) {
  auto ordered_ok = [&](long long lo, long long hi) {
    return dir == Direction::Increasing ? lo <= hi : lo >= hi;
  };
  MonotoneResult r;
  auto fail = [&](int i, int j) {
    r.monotone = false;
    r.witness = MonotoneWitness{i, j, m.values[i], m.values[j]};
  };
  if (sel.size() == l.size()) {
    // covers suffice on the full lattice
    for (const auto& [i, j] : l.hasse()) {
      if (!ordered_ok(m.values[i], m.values[j])) {
        fail(i, j);
        return r;
      }
    }
    return r;
  }
  // a selection's covers differ from the ambient ones: check all pairs
  for (int i : sel.indices)
    for (int j : sel.indices) {
      if (i == j || !l.leq(i, j)) continue;
      if (!ordered_ok(m.values[i], m.values[j])) {
        fail(i, j);
        return r;
      }
    }
  return r;
}

Analysis analyze_group(const FiniteGroup& g, const Limits& limits) {
  return analyze_group(FiniteGroup(g), limits);
}

Analysis analyze_group(FiniteGroup&& g, const Limits& limits) {
  Analysis a(std::move(g));
  a.lattice = enumerate_subgroups(a.group, limits);
  a.measure = measure_map(a.group, a.lattice);

  Subgroup z = center(a.group);
  a.z_index = a.lattice.index_of(z.members);
  if (a.z_index < 0) throw TheoremViolation("center missing from the lattice");

  a.cd = cd_lattice(a.group, a.lattice, a.measure);
  a.cent = centralizer_lattice(a.group, a.lattice, a.measure);
  a.interval_gz = interval(a.lattice, a.z_index, a.lattice.top());
  a.nilpotency = nilpotency(a.group);
  a.abelian = z.order == a.group.order();

  const int k = a.lattice.size();
  a.subnormal.resize(k);
  a.normal.resize(k);
  a.abelian_sub.resize(k);
  for (int i = 0; i < k; ++i) {
    a.subnormal[i] = is_subnormal(a.group, a.lattice, i) ? 1 : 0;
    a.normal[i] = is_normal(a.group, a.lattice.at(i)) ? 1 : 0;
    a.abelian_sub[i] = is_abelian(a.group, a.lattice.at(i)) ? 1 : 0;
  }

  PosetSelection full = full_selection(a.lattice);
  auto inc = is_monotone_on(a.measure, a.lattice, full, Direction::Increasing);
  a.increasing_on_S = inc.monotone;
  a.increasing_witness = inc.witness;
  a.decreasing_on_S =
      is_monotone_on(a.measure, a.lattice, full, Direction::Decreasing).monotone;
  a.increasing_on_C =
      is_monotone_on(a.measure, a.lattice, a.cent.sel, Direction::Increasing)
          .monotone;
  a.cd_equals_interval = a.cd == a.interval_gz;
  a.cd_equals_cent = a.cd == a.cent.sel;

  if (auto pp = prime_power(a.group.order())) {
    a.prime = pp->first;
    a.exp_a = pp->second;
    int zb = 0;
    long long zn = a.lattice.at(a.z_index).order;
    while (zn > 1) {
      zn /= pp->first;
      ++zb;
    }
    a.exp_b = zb;
  }
  if (a.group.order() == 1 || a.prime) a.cheng = cheng_condition(a.group);

  a.cent_qa = quasi_antichain(a.lattice, a.cent.sel);
  a.image = image_profile(a);
  return a;
}

IncreasingRecord verify_increasing(const Analysis& a) {
  IncreasingRecord r;
  r.increasing_on_S = a.increasing_on_S;
  r.witness = a.increasing_witness;

  r.center_intersection_rule = true;
  for (int i = 0; i < a.lattice.size(); ++i) {
    Bitset cap = a.lattice.at(i).members & a.lattice.at(a.z_index).members;
    int mi = a.lattice.index_of(cap);
    if (mi < 0)
      throw TheoremViolation("intersection with the center missing from the lattice");
    if (a.measure.values[i] != a.measure.values[mi]) {
      r.center_intersection_rule = false;
      break;
    }
  }

  r.cd_equals_interval = a.cd_equals_interval;
  if (!r.agree()) {
    std::ostringstream os;
    os << "equivalence broken on " << a.group.name() << ": increasing="
       << r.increasing_on_S << " intersection=" << r.center_intersection_rule
       << " cd=[G/Z]=" << r.cd_equals_interval;
    throw TheoremViolation(os.str());
  }
  return r;
}

CentralizerRecord verify_centralizers(const Analysis& a) {
  CentralizerRecord r;
  r.increasing_on_C = a.increasing_on_C;
  r.cd_equals_cent = a.cd_equals_cent;
  r.nilpotent = a.nilpotency.nilpotent;
  if (r.increasing_on_C != r.cd_equals_cent) {
    std::ostringstream os;
    os << "biconditional broken on " << a.group.name() << ": increasing_on_C="
       << r.increasing_on_C << " but C(G)=CD(G) is " << r.cd_equals_cent;
    throw TheoremViolation(os.str());
  }
  if (r.increasing_on_C && !r.nilpotent) {
    throw TheoremViolation("measure increasing on C(G) but " + a.group.name() +
                           " is not nilpotent");
  }
  return r;
}

PosetRecord verify_poset(const Analysis& a, const PosetSelection& sel) {
  if (!sel.contains(a.z_index))
    throw PreconditionError("poset selection must contain the center");
  if (!sel.contains(a.lattice.top()))
    throw PreconditionError("poset selection must contain the whole group");
  if (!(sel.mask & a.cd.mask).any())
    throw PreconditionError("poset selection must intersect the CD lattice");

  PosetRecord r;
  auto mono = is_monotone_on(a.measure, a.lattice, sel, Direction::Increasing);
  r.increasing_on_sel = mono.monotone;
  r.conclusion_applies = mono.monotone;
  if (!mono.monotone) return r;

  for (int i : sel.indices) {
    bool in_cd = a.cd.contains(i);
    bool above_z = a.lattice.leq(a.z_index, i);
    if (in_cd != above_z) {
      r.conclusion_ok = false;
      std::ostringstream os;
      os << "increasing selection on " << a.group.name()
         << " but CD membership and Z-containment disagree at index " << i;
      throw TheoremViolation(os.str());
    }
  }

  // constancy on [C_G(C)/C] for abelian centralizers inside the selection,
  // and absorption into CD when the interval touches it
  for (int c : sel.indices) {
    if (!a.cent.sel.contains(c) || !a.abelian_sub[c]) continue;
    int dual = a.measure.centralizer_index[c];
    if (!sel.contains(dual)) continue;
    bool touches_cd = false;
    bool inside_cd = true;
    for (int x : sel.indices) {
      if (!a.lattice.leq(c, x) || !a.lattice.leq(x, dual)) continue;
      if (a.measure.values[x] != a.measure.values[c]) {
        r.interval_constancy_ok = false;
        throw TheoremViolation("measure not constant on [C_G(C)/C] within an "
                               "increasing selection of " + a.group.name());
      }
      touches_cd = touches_cd || a.cd.contains(x);
      inside_cd = inside_cd && a.cd.contains(x);
    }
    if (touches_cd && !inside_cd) {
      r.interval_absorption_ok = false;
      throw TheoremViolation("[C_G(C)/C] meets CD(G) without lying inside it on " +
                             a.group.name());
    }
  }
  return r;
}

ImageProfile image_profile(const Analysis& a) {
  ImageProfile p;
  p.image_size = static_cast<int>(a.measure.image.size());
  const long long zorder = a.lattice.at(a.z_index).order;
  const long long gorder = a.group.order();
  p.k = 0;
  p.chain_present = true;
  for (long long d = 1; d <= zorder; ++d) {
    if (zorder % d != 0) continue;
    ++p.k;
    if (!std::binary_search(a.measure.image.begin(), a.measure.image.end(),
                            d * gorder))
      p.chain_present = false;
  }
  p.bound_ok = p.image_size >= p.k;
  if (!p.chain_present || !p.bound_ok)
    throw TheoremViolation("measure image misses { d*|G| : d | |Z(G)| } on " +
                           a.group.name());
  if (a.increasing_on_S) p.equality_when_increasing = (p.image_size == p.k);
  return p;
}

bool cheng_condition(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  auto pp = prime_power(g.order());
  if (!pp)
    throw PreconditionError("the Cheng condition applies to prime-power-order "
                            "groups only; " + g.name() + " has order " +
                            std::to_string(g.order()));

  Subgroup derived = derived_subgroup(g);
  std::vector<int> generators;
  for (int x : derived.members.members())
    if (g.element_order(x) == derived.order) generators.push_back(x);
  const bool cyclic = !generators.empty() || derived.order == 1;
  if (derived.order == 1) return true;  // abelian: condition holds vacuously

  bool satisfied = false;
  if (cyclic) {
    for (int a : generators) {
      Subgroup a4 = cyclic_subgroup(g, g.power(a, 4));
      Subgroup comm = commutator_with_group(g, a);
      if (comm.members.subset_of(a4.members)) {
        satisfied = true;
        break;
      }
    }
  }
  if (pp->first > 2) {
    // for odd p the commutator clause is automatic; both routes must agree
    if (satisfied != cyclic)
      throw TheoremViolation("odd-order Cheng routes disagree on " + g.name());
    return cyclic;
  }
  return satisfied;
}

bool index_factorization_check(const Analysis& a) {
  if (!a.cheng.has_value() || !*a.cheng)
    throw PreconditionError("index factorization requires the Cheng condition");
  const long long z = a.lattice.at(a.z_index).order;
  const long long gz = a.group.order() / z;
  for (int i : a.interval_gz.indices) {
    const long long h = a.lattice.at(i).order;
    const long long c = a.lattice.at(a.measure.centralizer_index[i]).order;
    if (gz != (h / z) * (c / z)) return false;
  }
  return true;
}

SylowRecord sylow_decomposition_verify(const Analysis& a, const Limits& limits) {
  SylowRecord r;
  r.nilpotent = a.nilpotency.nilpotent;
  r.increasing_on_C = a.increasing_on_C;
  r.increasing_on_S = a.increasing_on_S;

  if (!r.nilpotent) {
    // both monotonicity statements must already fail
    if (r.increasing_on_C || r.increasing_on_S)
      throw TheoremViolation("monotone measure on a non-nilpotent group " +
                             a.group.name());
    r.factors_c_equals_cd = false;
    r.factors_cheng = false;
    r.centralizer_decomposition_ok = true;
    r.lattice_decomposition_ok = true;
    return r;
  }

  r.factors_c_equals_cd = true;
  r.factors_cheng = true;
  for (int p : prime_divisors(a.group.order())) {
    SylowFactor f;
    f.prime = p;
    long long part = 1;
    long long rest = a.group.order();
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
    f.order = static_cast<int>(part);

    if (f.order == a.group.order()) {
      // the group is its own Sylow subgroup
      f.c_equals_cd = a.cd_equals_cent;
      f.cheng = a.cheng.value_or(false);
    } else {
      // in a nilpotent group the p-elements form the unique Sylow p-subgroup
      Bitset members(a.group.order());
      for (int x = 0; x < a.group.order(); ++x) {
        int ord = a.group.element_order(x);
        while (ord % p == 0) ord /= p;
        if (ord == 1) members.set(x);
      }
      Subgroup sylow = subgroup_from_members(a.group, members);
      if (sylow.order != f.order)
        throw TheoremViolation("Sylow subgroup of a nilpotent group has wrong order");
      std::ostringstream nm;
      nm << "Syl_" << p << "(" << a.group.name() << ")";
      Analysis fa = analyze_group(subgroup_as_group(a.group, sylow, nm.str()), limits);
      f.c_equals_cd = fa.cd_equals_cent;
      f.cheng = fa.cheng.value_or(false);
    }
    r.factors_c_equals_cd = r.factors_c_equals_cd && f.c_equals_cd;
    r.factors_cheng = r.factors_cheng && f.cheng;
    r.factors.push_back(f);
  }

  r.centralizer_decomposition_ok = (r.increasing_on_C == r.factors_c_equals_cd);
  r.lattice_decomposition_ok = (r.increasing_on_S == r.factors_cheng);
  return r;
}

QuasiReport quasi_antichain_report(const Analysis& a) {
  QuasiReport r;
  if (a.abelian) {
    r.abelian = true;
    return r;
  }
  const auto& l = a.lattice;

  r.maximal_centralizers = coatoms(l, a.cent.sel);
  r.minimal_centralizers = atoms(l, a.cent.sel);
  r.qa = a.cent_qa.is_qa;
  r.width = a.cent_qa.width;

  std::unordered_set<int> element_centralizers;
  const Subgroup& z = l.at(a.z_index);
  for (int x = 0; x < a.group.order(); ++x) {
    if (z.contains(x)) continue;
    element_centralizers.insert(
        l.index_of(centralizer_of_element(a.group, x).members));
  }
  r.maximal_are_element_centralizers = true;
  r.all_maximal_abelian = true;
  Bitset covered(a.group.order());
  for (int m : r.maximal_centralizers) {
    if (!element_centralizers.count(m)) r.maximal_are_element_centralizers = false;
    if (!a.abelian_sub[m]) r.all_maximal_abelian = false;
    covered |= l.at(m).members;
  }
  r.union_covers_group = covered.count() == a.group.order();
  r.atom_coatom_counts_equal =
      r.maximal_centralizers.size() == r.minimal_centralizers.size();
  r.maximal_count_greater_two = r.maximal_centralizers.size() > 2;
  r.qa_iff_all_maximal_abelian = (r.qa == r.all_maximal_abelian);

  const long long gorder = a.group.order();
  const long long zorder = z.order;

  if (a.prime && a.cd_equals_cent) {
    const int pa = *a.exp_a, pb = *a.exp_b;
    r.ab_even = (pa + pb) % 2 == 0;
    if (*r.ab_even) {
      const long long expect = ipow(*a.prime, (pa + pb) / 2);
      r.self_centralizing_order = expect;
      bool ok = true;
      for (int i = 0; i < l.size(); ++i)
        if (a.abelian_sub[i] && a.measure.centralizer_index[i] == i)
          ok = ok && l.at(i).order == expect;
      r.self_centralizing_orders_ok = ok;
    }
  }

  if (a.prime && a.cd_equals_cent && r.qa) {
    r.class_two = a.nilpotency.nclass == 2;
    bool sq = true;
    for (int i : r.minimal_centralizers)
      sq = sq && static_cast<long long>(l.at(i).order) * l.at(i).order ==
                     gorder * zorder;
    r.atom_orders_are_sqrt = sq;

    // w = p^b + 1 with b <= a', where |G/Z| = p^{2a'}
    const int p = *a.prime;
    long long quot = gorder / zorder;
    int qa_exp = 0;
    while (quot % p == 0) {
      quot /= p;
      ++qa_exp;
    }
    bool ok = quot == 1 && qa_exp % 2 == 0;
    long long wm1 = r.width - 1;
    int b = 0;
    while (wm1 % p == 0) {
      wm1 /= p;
      ++b;
    }
    ok = ok && wm1 == 1 && b >= 1 && b <= qa_exp / 2;
    r.width_is_prime_power_plus_one = ok;
    if (ok) r.width_exponent = b;
  }

  // CD(G) a quasi-antichain of width >= 3 with G a member
  QuasiAntichain cd_qa = quasi_antichain(l, a.cd);
  if (cd_qa.is_qa && cd_qa.width >= 3 && a.cd.contains(l.top())) {
    bool ok = a.nilpotency.nilpotent && a.nilpotency.nclass == 2;
    long long quot = gorder / zorder;  // |G/Z| = p^{2a}
    auto pp = [&]() -> std::optional<std::pair<int, int>> {
      if (quot < 2) return std::nullopt;
      for (int p = 2; static_cast<long long>(p) * p <= quot; ++p)
        if (quot % p == 0) {
          long long rest = quot;
          int e = 0;
          while (rest % p == 0) {
            rest /= p;
            ++e;
          }
          if (rest != 1) return std::nullopt;
          return std::make_pair(p, e);
        }
      return std::make_pair(static_cast<int>(quot), 1);
    }();
    if (!pp || pp->second % 2 != 0) {
      ok = false;
    } else {
      const int p = pp->first;
      const int aa = pp->second / 2;
      long long wm1 = cd_qa.width - 1;
      int b = 0;
      while (wm1 % p == 0) {
        wm1 /= p;
        ++b;
      }
      ok = ok && wm1 == 1 && b >= 1 && b <= aa;
    }
    r.cd_quasi_structure_ok = ok;
  }
  return r;
}

}  // namespace cdscope
