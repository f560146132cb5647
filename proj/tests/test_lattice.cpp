#include <doctest.h>

#include <algorithm>

#include "cdscope/analysis.hpp"
#include "cdscope/constructors.hpp"
#include "cdscope/errors.hpp"
#include "cdscope/lattice.hpp"
#include "oracle.hpp"

using namespace cdscope;

namespace {

std::vector<int> indices_of_order(const SubgroupLattice& l, int order) {
  std::vector<int> out;
  for (int i = 0; i < l.size(); ++i)
    if (l.at(i).order == order) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(enumerate_subgroups(make_named(Family::Symmetric, 3)).size() == 6);
  CHECK(enumerate_subgroups(make_named(Family::Alternating, 4)).size() == 10);
  CHECK(enumerate_subgroups(make_named(Family::Cyclic, 5)).size() == 2);
  CHECK(enumerate_subgroups(make_named(Family::Cyclic, 7)).size() == 2);
  CHECK(enumerate_subgroups(make_named(Family::Dihedral, 8)).size() == 10);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 3));
  gs.push_back(make_named(Family::Dihedral, 8));
  gs.push_back(make_named(Family::Alternating, 4));
  gs.push_back(make_named(Family::GeneralizedQuaternion, 8));
  gs.push_back(make_named(Family::Dihedral, 16));
  gs.push_back(make_named(Family::Cyclic, 12));
  for (const auto& g : gs) {
    auto expected = oracle::brute_force_subgroups(g);
    auto l = enumerate_subgroups(g);
    REQUIRE(l.size() == static_cast<int>(expected.size()));
    for (const auto& b : expected) CHECK(l.index_of(b) >= 0);
  }
}

TEST_CASE("lattice ordering is deterministic") {
  auto l = enumerate_subgroups(make_named(Family::Alternating, 4));
  CHECK(l.at(l.bottom()).order == 1);
  CHECK(l.at(l.top()).order == 12);
  for (int i = 1; i < l.size(); ++i) {
    CHECK(l.at(i - 1).order <= l.at(i).order);
    if (l.at(i - 1).order == l.at(i).order)
      CHECK(Bitset::lex_less(l.at(i - 1).members, l.at(i).members));
  }
}

TEST_CASE("meet and join") {
  auto k4 = make_named(Family::Dihedral, 4);  // the Klein four group
  auto lk = enumerate_subgroups(k4);
  auto twos = indices_of_order(lk, 2);
  REQUIRE(twos.size() == 3);
  CHECK(meet(lk, twos[0], twos[1]) == lk.bottom());

  auto d8 = make_named(Family::Dihedral, 8);
  auto ld = enumerate_subgroups(d8);
  // two distinct reflections inside the same Klein four join to it
  auto k4s = indices_of_order(ld, 4);
  int klein = -1;
  for (int i : k4s) {
    bool cyclic = false;
    for (int x : ld.at(i).members.members())
      cyclic = cyclic || d8.element_order(x) == 4;
    if (!cyclic) {
      klein = i;
      break;
    }
  }
  REQUIRE(klein >= 0);
  std::vector<int> inside;
  for (int i : indices_of_order(ld, 2))
    if (ld.leq(i, klein) && !is_normal(d8, ld.at(i))) inside.push_back(i);
  REQUIRE(inside.size() == 2);
  CHECK(join(d8, ld, inside[0], inside[1]) == klein);

  auto s3 = make_named(Family::Symmetric, 3);
  auto ls = enumerate_subgroups(s3);
  int c3 = indices_of_order(ls, 3).at(0);
  int c2 = indices_of_order(ls, 2).at(0);
  CHECK(join(s3, ls, c3, c2) == ls.top());
}

TEST_CASE("meet is the bitwise intersection") {
  auto g = make_named(Family::Symmetric, 4);
  auto l = enumerate_subgroups(g);
  for (int i = 0; i < l.size(); i += 3)
    for (int j = 0; j < l.size(); j += 5) {
      int m = meet(l, i, j);
      CHECK(l.at(m).members == (l.at(i).members & l.at(j).members));
    }
}

TEST_CASE("intervals") {
  auto d8 = make_named(Family::Dihedral, 8);
  auto l = enumerate_subgroups(d8);
  int z = l.index_of(center(d8).members);
  REQUIRE(z >= 0);
  CHECK(interval(l, z, l.top()).size() == 5);
  CHECK(interval(l, l.top(), l.top()).size() == 1);

  auto a4 = make_named(Family::Alternating, 4);
  auto la = enumerate_subgroups(a4);
  CHECK(interval(la, la.bottom(), la.top()).size() == 10);

  auto twos = indices_of_order(l, 2);
  int s1 = -1, s2 = -1;
  for (int i : twos)
    for (int j : twos)
      if (i != j && !l.leq(i, j) && !l.leq(j, i)) {
        s1 = i;
        s2 = j;
      }
  REQUIRE(s1 >= 0);
  CHECK_THROWS_AS(interval(l, s1, s2), PreconditionError);
}

TEST_CASE("subnormality") {
  auto d8 = make_named(Family::Dihedral, 8);
  auto l = enumerate_subgroups(d8);
  for (int i : indices_of_order(l, 2))
    CHECK(is_subnormal(d8, l, i));  // D8 nilpotent: everything subnormal

  auto a4 = make_named(Family::Alternating, 4);
  auto la = enumerate_subgroups(a4);
  for (int i : indices_of_order(la, 3))
    CHECK_FALSE(is_subnormal(a4, la, i));  // closure of a C3 is all of A4
  for (int i = 0; i < la.size(); ++i)
    if (is_normal(a4, la.at(i))) CHECK(is_subnormal(a4, la, i));
}

TEST_CASE("Wielandt join closure of subnormal subgroups") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 4));
  gs.push_back(make_named(Family::Alternating, 4));
  gs.push_back(make_named(Family::Dihedral, 16));
  for (const auto& g : gs) {
    auto l = enumerate_subgroups(g);
    std::vector<int> sn;
    for (int i = 0; i < l.size(); ++i)
      if (is_subnormal(g, l, i)) sn.push_back(i);
    for (int i : sn)
      for (int j : sn)
        CHECK(is_subnormal(g, l, join(g, l, i, j)));
  }
}

TEST_CASE("nilpotency and class") {
  auto a4 = nilpotency(make_named(Family::Alternating, 4));
  CHECK_FALSE(a4.nilpotent);
  CHECK_FALSE(a4.nclass.has_value());

  auto c6 = nilpotency(make_named(Family::Cyclic, 6));
  CHECK(c6.nilpotent);
  CHECK(c6.nclass == 1);

  auto h = nilpotency(heisenberg(3, 1));
  CHECK(h.nilpotent);
  CHECK(h.nclass == 2);

  CHECK(nilpotency(make_named(Family::Cyclic, 1)).nclass == 0);
  CHECK(nilpotency(make_named(Family::Dihedral, 8)).nclass == 2);
  CHECK_FALSE(nilpotency(make_named(Family::Symmetric, 3)).nilpotent);

  // the upper central series of D16: 1 < Z < <r^2>Z < D16
  auto d16 = nilpotency(make_named(Family::Dihedral, 16));
  CHECK(d16.nilpotent);
  CHECK(d16.nclass == 3);
}

TEST_CASE("nilpotency equivalences") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 3));
  gs.push_back(make_named(Family::Symmetric, 4));
  gs.push_back(make_named(Family::Alternating, 4));
  gs.push_back(make_named(Family::Dihedral, 8));
  gs.push_back(make_named(Family::GeneralizedQuaternion, 16));
  gs.push_back(make_named(Family::Cyclic, 12));
  gs.push_back(heisenberg(3, 1));
  for (const auto& g : gs) {
    auto l = enumerate_subgroups(g);
    auto m = measure_map(g, l);
    auto cent = centralizer_lattice(g, l, m);
    bool all_sn = true;
    for (int i = 0; i < l.size(); ++i) all_sn = all_sn && is_subnormal(g, l, i);
    bool cent_sn = true;
    for (int i : cent.sel.indices) cent_sn = cent_sn && is_subnormal(g, l, i);
    bool nil = is_nilpotent(g);
    CHECK(nil == all_sn);
    CHECK(all_sn == cent_sn);
  }
}

TEST_CASE("hasse edges reconstruct containment by transitive closure") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 3));
  gs.push_back(make_named(Family::Dihedral, 8));
  gs.push_back(make_named(Family::Alternating, 4));
  gs.push_back(make_named(Family::GeneralizedQuaternion, 8));
  for (const auto& g : gs) {
    auto l = enumerate_subgroups(g);
    const int k = l.size();
    std::vector<Bitset> reach(k, Bitset(k));
    for (int i = 0; i < k; ++i) reach[i].set(i);
    for (const auto& [lo, hi] : l.hasse()) reach[lo].set(hi);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < k; ++i)
        for (int j = reach[i].first(); j >= 0; j = reach[i].next(j + 1)) {
          Bitset merged = reach[i] | reach[j];
          if (!(merged == reach[i])) {
            reach[i] = std::move(merged);
            changed = true;
          }
        }
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(l.leq(i, j) == reach[i].test(j));
  }
}

TEST_CASE("hasse edges are exactly the covers") {
  auto g = make_named(Family::Dihedral, 8);
  auto l = enumerate_subgroups(g);
  for (const auto& [lo, hi] : l.hasse()) {
    CHECK(l.leq(lo, hi));
    CHECK(lo != hi);
    for (int t = 0; t < l.size(); ++t)
      if (t != lo && t != hi) CHECK_FALSE(l.leq(lo, t) && l.leq(t, hi));
  }
}

TEST_CASE("atoms, coatoms, quasi-antichains") {
  auto d8 = make_named(Family::Dihedral, 8);
  auto a = analyze_group(d8);
  auto qa = quasi_antichain(a.lattice, a.cent.sel);
  CHECK(qa.is_qa);
  CHECK(qa.width == 3);
  CHECK(atoms(a.lattice, a.cent.sel).size() == 3);
  CHECK(coatoms(a.lattice, a.cent.sel).size() == 3);

  // a chain of three subgroups is degenerately a quasi-antichain of width 1
  int z = a.z_index;
  auto chain = PosetSelection::of(a.lattice, {a.lattice.bottom(), z, a.lattice.top()});
  auto cq = quasi_antichain(a.lattice, chain);
  CHECK(cq.is_qa);
  CHECK(cq.width == 1);

  // two members: degenerate, width 0
  auto two = PosetSelection::of(a.lattice, {a.lattice.bottom(), a.lattice.top()});
  auto tq = quasi_antichain(a.lattice, two);
  CHECK(tq.is_qa);
  CHECK(tq.width == 0);

  // one member: no distinct top and bottom
  auto one = PosetSelection::of(a.lattice, {a.lattice.top()});
  CHECK_FALSE(quasi_antichain(a.lattice, one).is_qa);

  auto h = analyze_group(heisenberg(3, 1));
  auto hq = quasi_antichain(h.lattice, h.cent.sel);
  CHECK(hq.is_qa);
  CHECK(hq.width == 4);

  // selections without a unique top are rejected
  auto twos = indices_of_order(a.lattice, 2);
  auto bad = PosetSelection::of(a.lattice, {twos[0], twos[1]});
  CHECK_THROWS_AS(atoms(a.lattice, bad), PreconditionError);
  CHECK_THROWS_AS(quasi_antichain(a.lattice, bad), PreconditionError);
}

TEST_CASE("subgroup count cap") {
  Limits tight;
  tight.max_subgroups = 5;
  CHECK_THROWS_AS(enumerate_subgroups(make_named(Family::Dihedral, 8), tight),
                  SizeError);
}
