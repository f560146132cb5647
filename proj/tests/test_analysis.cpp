#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "cdscope/analysis.hpp"
#include "cdscope/constructors.hpp"
#include "cdscope/errors.hpp"
#include "cdscope/expr.hpp"
#include "cdscope/report.hpp"
#include "oracle.hpp"

using namespace cdscope;

namespace {

std::multiset<std::pair<std::string, long long>> labelled_measures(
    const Analysis& a) {
  std::multiset<std::pair<std::string, long long>> out;
  for (int i = 0; i < a.lattice.size(); ++i)
    out.insert({display_name(a.group, a.lattice, i), a.measure.values[i]});
  return out;
}

}  // namespace

TEST_CASE("measure map of S3") {
  auto a = analyze_group(make_named(Family::Symmetric, 3));
  auto got = labelled_measures(a);
  std::multiset<std::pair<std::string, long long>> want = {
      {"1", 6}, {"C2", 4}, {"C2", 4}, {"C2", 4}, {"C3", 9}, {"S3", 6}};
  CHECK(got == want);
  CHECK(a.measure.image == std::vector<long long>{4, 6, 9});
  CHECK(a.measure.max_value == 9);
}

TEST_CASE("measure map of A4") {
  auto a = analyze_group(make_named(Family::Alternating, 4));
  auto got = labelled_measures(a);
  std::multiset<std::pair<std::string, long long>> want = {
      {"1", 12},  {"C2", 8}, {"C2", 8}, {"C2", 8}, {"C3", 9},
      {"C3", 9},  {"C3", 9}, {"C3", 9}, {"K4", 16}, {"A4", 12}};
  CHECK(got == want);
}

TEST_CASE("m(G) = |G| * |Z(G)| and the measure matches recomputation") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 4));
  gs.push_back(make_named(Family::Dihedral, 16));
  gs.push_back(heisenberg(3, 1));
  for (const auto& g : gs) {
    auto a = analyze_group(g);
    CHECK(a.measure.values[a.lattice.top()] ==
          static_cast<long long>(g.order()) * a.center_order());
    for (int i = 0; i < a.lattice.size(); ++i)
      CHECK(a.measure.values[i] ==
            oracle::measure_recompute(g, a.lattice.at(i).members));
  }
}

TEST_CASE("CD lattice examples") {
  auto d8 = analyze_group(make_named(Family::Dihedral, 8));
  CHECK(d8.cd.size() == 5);
  for (int i : d8.cd.indices) CHECK(d8.lattice.leq(d8.z_index, i));
  CHECK(d8.cd == d8.interval_gz);

  auto a4 = analyze_group(make_named(Family::Alternating, 4));
  CHECK(a4.cd.size() == 1);
  CHECK(a4.lattice.at(a4.cd.indices[0]).order == 4);
  CHECK(a4.measure.max_value == 16);

  auto c6 = analyze_group(make_named(Family::Cyclic, 6));
  CHECK(c6.cd.contains(c6.lattice.top()));
}

TEST_CASE("centralizer lattice examples") {
  auto d8 = analyze_group(make_named(Family::Dihedral, 8));
  CHECK(d8.cent.sel.size() == 5);
  std::multiset<int> orders;
  for (int i : d8.cent.sel.indices) orders.insert(d8.lattice.at(i).order);
  CHECK(orders == std::multiset<int>{2, 4, 4, 4, 8});

  auto c6 = analyze_group(make_named(Family::Cyclic, 6));
  CHECK(c6.cent.sel.size() == 1);
  CHECK(c6.cent.sel.contains(c6.lattice.top()));

  auto prod = analyze_group(direct_product(make_named(Family::Dihedral, 8),
                                           make_named(Family::Dihedral, 8)));
  CHECK(prod.cent.sel.size() == 25);
  CHECK(prod.cd.size() == 25);
  CHECK(prod.cd_equals_cent);
}

TEST_CASE("centralizer duality is an m-preserving involution") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 3));
  gs.push_back(make_named(Family::Dihedral, 16));
  gs.push_back(make_named(Family::Alternating, 4));
  gs.push_back(heisenberg(2, 2));
  for (const auto& g : gs) {
    auto a = analyze_group(g);
    const auto& sel = a.cent.sel;
    for (std::size_t t = 0; t < sel.indices.size(); ++t) {
      int c = sel.indices[t];
      int dual = a.cent.dual[t];
      CHECK(sel.contains(dual));
      CHECK(a.measure.centralizer_index[dual] == c);  // involution
      CHECK(a.measure.values[c] == a.measure.values[dual]);
      for (std::size_t u = 0; u < sel.indices.size(); ++u) {
        int c2 = sel.indices[u];
        if (a.lattice.leq(c, c2))  // duality reverses containment
          CHECK(a.lattice.leq(a.cent.dual[u], dual));
      }
    }
  }
}

TEST_CASE("monotonicity checks") {
  auto d8 = analyze_group(make_named(Family::Dihedral, 8));
  CHECK(d8.increasing_on_S);
  CHECK_FALSE(d8.decreasing_on_S);

  auto a4 = analyze_group(make_named(Family::Alternating, 4));
  CHECK_FALSE(a4.increasing_on_S);
  REQUIRE(a4.increasing_witness.has_value());
  CHECK(a4.increasing_witness->lower == a4.lattice.bottom());
  CHECK(a4.lattice.at(a4.increasing_witness->upper).order == 2);
  CHECK(a4.increasing_witness->m_lower == 12);
  CHECK(a4.increasing_witness->m_upper == 8);

  auto triv = analyze_group(make_named(Family::Cyclic, 1));
  CHECK(triv.increasing_on_S);
  CHECK(triv.decreasing_on_S);
}

TEST_CASE("monotone on selections uses all comparable pairs") {
  // inside A4 pick {1, C2, K4}: increasing fails via the non-cover pair 1 < K4
  auto a4 = analyze_group(make_named(Family::Alternating, 4));
  int c2 = -1, k4 = -1;
  for (int i = 0; i < a4.lattice.size(); ++i) {
    if (a4.lattice.at(i).order == 2 && c2 < 0) c2 = i;
    if (a4.lattice.at(i).order == 4) k4 = i;
  }
  auto sel = PosetSelection::of(a4.lattice, {a4.lattice.bottom(), c2, k4});
  auto r = is_monotone_on(a4.measure, a4.lattice, sel, Direction::Increasing);
  CHECK_FALSE(r.monotone);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->lower == a4.lattice.bottom());
}

TEST_CASE("increasing equivalence record") {
  auto d8 = verify_increasing(analyze_group(make_named(Family::Dihedral, 8)));
  CHECK(d8.increasing_on_S);
  CHECK(d8.center_intersection_rule);
  CHECK(d8.cd_equals_interval);

  auto a4 = verify_increasing(analyze_group(make_named(Family::Alternating, 4)));
  CHECK_FALSE(a4.increasing_on_S);
  CHECK_FALSE(a4.center_intersection_rule);
  CHECK_FALSE(a4.cd_equals_interval);

  auto q8 = verify_increasing(
      analyze_group(make_named(Family::GeneralizedQuaternion, 8)));
  CHECK(q8.increasing_on_S);
  CHECK(q8.center_intersection_rule);
  CHECK(q8.cd_equals_interval);
}

TEST_CASE("centralizer biconditional record") {
  auto h = verify_centralizers(analyze_group(heisenberg(3, 1)));
  CHECK(h.increasing_on_C);
  CHECK(h.cd_equals_cent);
  CHECK(h.nilpotent);

  auto s3 = verify_centralizers(analyze_group(make_named(Family::Symmetric, 3)));
  CHECK_FALSE(s3.increasing_on_C);
  CHECK_FALSE(s3.cd_equals_cent);

  auto ab = verify_centralizers(analyze_group(make_named(Family::Cyclic, 9)));
  CHECK(ab.increasing_on_C);
  CHECK(ab.cd_equals_cent);
  CHECK(ab.nilpotent);
}

TEST_CASE("poset record on C(G) and custom selections") {
  auto d8 = analyze_group(make_named(Family::Dihedral, 8));
  auto r = verify_poset(d8, d8.cent.sel);
  CHECK(r.increasing_on_sel);
  CHECK(r.conclusion_ok);

  // abelian: Z = G, so {Z, G} is a single member
  auto c6 = analyze_group(make_named(Family::Cyclic, 6));
  auto sel = PosetSelection::of(c6.lattice, {c6.z_index, c6.lattice.top()});
  auto rc = verify_poset(c6, sel);
  CHECK(rc.increasing_on_sel);

  auto h22 = analyze_group(heisenberg(2, 2));
  auto rh = verify_poset(h22, h22.cent.sel);
  CHECK(rh.increasing_on_sel);
  CHECK(rh.conclusion_ok);
  CHECK(atoms(h22.lattice, h22.cent.sel).size() == 5);  // p^n + 1

  // precondition: must contain Z and G and touch CD
  auto bad = PosetSelection::of(d8.lattice, {d8.lattice.bottom(), d8.lattice.top()});
  CHECK_THROWS_AS(verify_poset(d8, bad), PreconditionError);
}

TEST_CASE("image profile") {
  auto s3 = analyze_group(make_named(Family::Symmetric, 3));
  CHECK(s3.image.image_size == 3);
  CHECK(s3.image.k == 1);
  CHECK(s3.image.bound_ok);
  CHECK(s3.image.chain_present);
  CHECK_FALSE(s3.image.equality_when_increasing.has_value());

  auto q8 = analyze_group(make_named(Family::GeneralizedQuaternion, 8));
  CHECK(q8.measure.image == std::vector<long long>{8, 16});
  CHECK(q8.image.k == 2);
  REQUIRE(q8.image.equality_when_increasing.has_value());
  CHECK(*q8.image.equality_when_increasing);

  auto triv = analyze_group(make_named(Family::Cyclic, 1));
  CHECK(triv.measure.image == std::vector<long long>{1});
  CHECK(triv.image.k == 1);
  CHECK(*triv.image.equality_when_increasing);
}

TEST_CASE("Cheng condition") {
  CHECK(cheng_condition(make_named(Family::Dihedral, 8)));
  CHECK(cheng_condition(make_named(Family::GeneralizedQuaternion, 8)));
  CHECK(cheng_condition(make_named(Family::Cyclic, 8)));
  CHECK(cheng_condition(make_named(Family::Cyclic, 1)));
  CHECK(cheng_condition(heisenberg(3, 1)));
  CHECK(cheng_condition(heisenberg(5, 1)));
  CHECK_FALSE(cheng_condition(make_named(Family::Dihedral, 16)));
  CHECK_FALSE(cheng_condition(make_named(Family::GeneralizedQuaternion, 16)));
  CHECK_FALSE(cheng_condition(heisenberg(2, 2)));  // G' = K4 is not cyclic
  CHECK_THROWS_AS(cheng_condition(make_named(Family::Symmetric, 3)),
                  PreconditionError);
}

TEST_CASE("Cheng condition matches increasing_on_S for p-groups") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Dihedral, 8));
  gs.push_back(make_named(Family::Dihedral, 16));
  gs.push_back(make_named(Family::GeneralizedQuaternion, 8));
  gs.push_back(make_named(Family::GeneralizedQuaternion, 16));
  gs.push_back(make_named(Family::Cyclic, 8));
  gs.push_back(make_named(Family::Cyclic, 9));
  gs.push_back(heisenberg(2, 1));
  gs.push_back(heisenberg(3, 1));
  gs.push_back(heisenberg(2, 2));
  for (const auto& g : gs) {
    auto a = analyze_group(g);
    REQUIRE(a.cheng.has_value());
    CHECK(*a.cheng == a.increasing_on_S);
  }
}

TEST_CASE("index factorization |G/Z| = |H/Z| * |C(H)/Z|") {
  auto d8 = analyze_group(make_named(Family::Dihedral, 8));
  CHECK(index_factorization_check(d8));
  auto q8 = analyze_group(make_named(Family::GeneralizedQuaternion, 8));
  CHECK(index_factorization_check(q8));
  auto h31 = analyze_group(heisenberg(3, 1));
  CHECK(index_factorization_check(h31));

  auto d16 = analyze_group(make_named(Family::Dihedral, 16));
  CHECK_THROWS_AS(index_factorization_check(d16), PreconditionError);
}

TEST_CASE("Sylow decomposition") {
  auto q8c3 = analyze_group(direct_product(
      make_named(Family::GeneralizedQuaternion, 8), make_named(Family::Cyclic, 3)));
  auto r = sylow_decomposition_verify(q8c3);
  CHECK(r.nilpotent);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == 2);
  CHECK(r.factors[0].order == 8);
  CHECK(r.factors[0].cheng);
  CHECK(r.factors[1].prime == 3);
  CHECK(r.factors[1].order == 3);
  CHECK(r.increasing_on_S);
  CHECK(r.centralizer_decomposition_ok);
  CHECK(r.lattice_decomposition_ok);

  auto p = analyze_group(make_named(Family::Dihedral, 8));
  auto rp = sylow_decomposition_verify(p);
  REQUIRE(rp.factors.size() == 1);
  CHECK(rp.factors[0].order == 8);

  auto s3 = analyze_group(make_named(Family::Symmetric, 3));
  auto rs = sylow_decomposition_verify(s3);
  CHECK_FALSE(rs.nilpotent);
  CHECK(rs.factors.empty());
  CHECK(rs.centralizer_decomposition_ok);
  CHECK(rs.lattice_decomposition_ok);

  auto dd = analyze_group(direct_product(make_named(Family::Dihedral, 8),
                                         make_named(Family::Dihedral, 8)));
  auto rd = sylow_decomposition_verify(dd);
  REQUIRE(rd.factors.size() == 1);
  CHECK(rd.factors[0].c_equals_cd);
  CHECK_FALSE(rd.factors[0].cheng);
  CHECK(rd.increasing_on_C);
  CHECK_FALSE(rd.increasing_on_S);
  CHECK(rd.centralizer_decomposition_ok);
  CHECK(rd.lattice_decomposition_ok);
}

TEST_CASE("quasi-antichain report: Heisenberg") {
  auto a = analyze_group(heisenberg(2, 2));
  auto r = quasi_antichain_report(a);
  CHECK_FALSE(r.abelian);
  CHECK(r.qa);
  CHECK(r.width == 5);
  CHECK(r.all_maximal_abelian);
  CHECK(r.maximal_are_element_centralizers);
  CHECK(r.union_covers_group);
  CHECK(r.atom_coatom_counts_equal);
  CHECK(r.maximal_count_greater_two);
  CHECK(r.qa_iff_all_maximal_abelian);
  REQUIRE(r.ab_even.has_value());
  CHECK(*r.ab_even);  // a=6, b=2
  CHECK(r.self_centralizing_order == 16);
  CHECK(*r.self_centralizing_orders_ok);
  CHECK(*r.class_two);
  CHECK(*r.atom_orders_are_sqrt);  // 16^2 == 64 * 4
  CHECK(*r.width_is_prime_power_plus_one);
  CHECK(r.width_exponent == 2);  // 5 = 2^2 + 1
  for (int i : r.minimal_centralizers) {
    CHECK(a.lattice.at(i).order == 16);
    CHECK(static_cast<bool>(a.abelian_sub[i]));
  }
}

TEST_CASE("quasi-antichain report: D8 x D8 is the converse failure") {
  auto a = analyze_group(direct_product(make_named(Family::Dihedral, 8),
                                        make_named(Family::Dihedral, 8)));
  auto r = quasi_antichain_report(a);
  CHECK_FALSE(r.qa);
  CHECK_FALSE(r.all_maximal_abelian);  // C_G((s,1)) is nonabelian
  CHECK(r.qa_iff_all_maximal_abelian);
  CHECK(r.maximal_are_element_centralizers);
  CHECK(r.union_covers_group);
  CHECK(r.maximal_count_greater_two);
  // yet C = CD here, so the p-group order facts still apply
  REQUIRE(r.ab_even.has_value());
  CHECK(*r.ab_even);  // a=6, b=2
  CHECK(r.self_centralizing_order == 16);
  CHECK(*r.self_centralizing_orders_ok);
}

TEST_CASE("quasi-antichain report: S3") {
  auto a = analyze_group(make_named(Family::Symmetric, 3));
  auto r = quasi_antichain_report(a);
  CHECK(r.maximal_centralizers.size() == 4);  // C3 and the three C2
  CHECK(r.maximal_count_greater_two);
  CHECK(r.union_covers_group);
  CHECK(r.maximal_are_element_centralizers);
  CHECK(r.atom_coatom_counts_equal);
}

TEST_CASE("quasi-antichain report: abelian groups degenerate") {
  auto a = analyze_group(make_named(Family::Cyclic, 12));
  auto r = quasi_antichain_report(a);
  CHECK(r.abelian);
  CHECK(r.required_hold());
}

TEST_CASE("CD is contained in the centralizers and the subnormal subgroups") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 3));
  gs.push_back(make_named(Family::Symmetric, 4));
  gs.push_back(make_named(Family::Alternating, 4));
  gs.push_back(make_named(Family::Dihedral, 16));
  gs.push_back(heisenberg(2, 2));
  for (const auto& g : gs) {
    auto a = analyze_group(g);
    for (int i : a.cd.indices) {
      CHECK(a.cent.sel.contains(i));
      CHECK(static_cast<bool>(a.subnormal[i]));
    }
  }
}

TEST_CASE("decreasing measure only on the trivial group") {
  std::vector<FiniteGroup> gs;
  gs.push_back(make_named(Family::Symmetric, 3));
  gs.push_back(make_named(Family::Cyclic, 2));
  gs.push_back(make_named(Family::Cyclic, 12));
  gs.push_back(make_named(Family::Dihedral, 8));
  gs.push_back(heisenberg(3, 1));
  for (const auto& g : gs) {
    auto a = analyze_group(g);
    CHECK_FALSE(a.decreasing_on_S);
  }
  CHECK(analyze_group(make_named(Family::Cyclic, 1)).decreasing_on_S);
}

TEST_CASE("product compatibility of CD and C") {
  Limits limits;
  GroupExpr e = parse("D(8) x C(3)");
  auto a = analyze_group(evaluate(e, limits), limits);
  auto outcome = run_theorem("product", a, &e, limits);
  CHECK(outcome.pass);

  GroupExpr e2 = parse("Q(8) x C(3)");
  auto a2 = analyze_group(evaluate(e2, limits), limits);
  CHECK(run_theorem("product", a2, &e2, limits).pass);
}

TEST_CASE("every flag is recomputable from the lattice and measure") {
  auto a = analyze_group(make_named(Family::Dihedral, 8));
  auto full = full_selection(a.lattice);
  CHECK(a.increasing_on_S ==
        is_monotone_on(a.measure, a.lattice, full, Direction::Increasing).monotone);
  CHECK(a.decreasing_on_S ==
        is_monotone_on(a.measure, a.lattice, full, Direction::Decreasing).monotone);
  CHECK(a.increasing_on_C ==
        is_monotone_on(a.measure, a.lattice, a.cent.sel, Direction::Increasing)
            .monotone);
  CHECK(a.cd_equals_interval == (a.cd == a.interval_gz));
  CHECK(a.cd_equals_cent == (a.cd == a.cent.sel));
}
