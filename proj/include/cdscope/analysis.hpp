#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdscope/lattice.hpp"

namespace cdscope {

/// The measure H -> |H| * |C_G(H)| as an exact integer per lattice index,
/// with its fiber decomposition.
struct MeasureMap {
  std::vector<long long> values;
  std::vector<int> centralizer_index;  // lattice index of C_G(H) per subgroup
  long long max_value = 0;
  std::vector<long long> image;  // sorted distinct values
  std::vector<std::pair<long long, std::vector<int>>> fibers;  // by value asc
};

MeasureMap measure_map(const FiniteGroup& g, const SubgroupLattice& l);

/// The maximum-measure fiber. Closure under meet and join is re-verified;
/// a failure is a TheoremViolation (kernel bug), not an input property.
PosetSelection cd_lattice(const FiniteGroup& g, const SubgroupLattice& l,
                          const MeasureMap& m);

/// All distinct subgroups of the form C_G(H), with the duality map
/// C -> C_G(C) restricted to them.
struct CentralizerLattice {
  PosetSelection sel;
  std::vector<int> dual;  // dual[t] = lattice index of C_G(sel.indices[t])
};
CentralizerLattice centralizer_lattice(const FiniteGroup& g,
                                       const SubgroupLattice& l,
                                       const MeasureMap& m);

enum class Direction { Increasing, Decreasing };

struct MonotoneWitness {
  int lower = -1;
  int upper = -1;
  long long m_lower = 0;
  long long m_upper = 0;
};

struct MonotoneResult {
  bool monotone = true;
  std::optional<MonotoneWitness> witness;
};

/// On the full lattice, cover pairs suffice; an arbitrary selection is
/// checked on all comparable pairs since its cover relation differs from
/// the ambient one. The first violation in index order is the witness.
MonotoneResult is_monotone_on(const MeasureMap& m, const SubgroupLattice& l,
                              const PosetSelection& sel, Direction dir);

/// Divisor-count profile of the measure image. `chain_present` records that

/// { d * |G| : d divides |Z(G)| } lands inside the image.
struct ImageProfile {
  int image_size = 0;
  int k = 0;  // number of divisors of |Z(G)|
  bool bound_ok = false;
  bool chain_present = false;
  std::optional<bool> equality_when_increasing;  // set when m is increasing
};

/// A group together with everything the analyses derive from it. Built once
/// and shared by the verifiers, the reports, and the emitters.
struct Analysis {
  explicit Analysis(FiniteGroup g) : group(std::move(g)) {}

  FiniteGroup group;
  SubgroupLattice lattice;
  MeasureMap measure;

  int z_index = -1;           // lattice index of Z(G)
  PosetSelection cd;          // max-measure fiber
  CentralizerLattice cent;
  PosetSelection interval_gz;  // [G/Z(G)]
  NilpotencyInfo nilpotency;

  std::vector<char> subnormal;  // per lattice index
  std::vector<char> normal;
  std::vector<char> abelian_sub;

  bool increasing_on_S = false;
  std::optional<MonotoneWitness> increasing_witness;
  bool increasing_on_C = false;
  bool decreasing_on_S = false;
  bool cd_equals_interval = false;
  bool cd_equals_cent = false;
  std::optional<bool> cheng;  // prime-power order groups only
  ImageProfile image;
  QuasiAntichain cent_qa;

  std::optional<int> prime;   // p with |G| = p^a, when |G| > 1 is a p-power
  std::optional<int> exp_a;   // |G| = p^a
  std::optional<int> exp_b;   // |Z(G)| = p^b

  bool abelian = false;

  int order() const { return group.order(); }
  long long center_order() const { return lattice.at(z_index).order; }
};

Analysis analyze_group(const FiniteGroup& g, const Limits& limits = {});
Analysis analyze_group(FiniteGroup&& g, const Limits& limits = {});

/// Equivalence record: m increasing on S(G) <=> m(H) = m(H n Z) for all H
/// <=> CD(G) = [G/Z(G)]. Disagreement raises TheoremViolation.
struct IncreasingRecord {
  bool increasing_on_S = false;
  bool center_intersection_rule = false;
  bool cd_equals_interval = false;
  std::optional<MonotoneWitness> witness;
  bool agree() const {
    return increasing_on_S == center_intersection_rule &&
           center_intersection_rule == cd_equals_interval;
  }
};
IncreasingRecord verify_increasing(const Analysis& a);

/// Biconditional record: m increasing on C(G) <=> C(G) = CD(G); when both
/// hold the group must be nilpotent. Violations raise TheoremViolation.
struct CentralizerRecord {
  bool increasing_on_C = false;
  bool cd_equals_cent = false;
  bool nilpotent = false;
};
CentralizerRecord verify_centralizers(const Analysis& a);

/// For a selection containing Z(G) and G and meeting CD(G): if the measure
/// is increasing on it, CD n sel = { H in sel : Z <= H }, and the measure is
/// constant on [C_G(C)/C]_sel for every abelian centralizer C in sel with
/// C_G(C) in sel (and such intervals meeting CD lie inside CD).
struct PosetRecord {
  bool increasing_on_sel = false;
  bool conclusion_applies = false;  // == increasing_on_sel
  bool conclusion_ok = true;
  bool interval_constancy_ok = true;
  bool interval_absorption_ok = true;
};
PosetRecord verify_poset(const Analysis& a, const PosetSelection& sel);

ImageProfile image_profile(const Analysis& a);

/// For prime-power order G: true iff G' is cyclic with a generator a such
/// that [a,G] <= <a^4>. For odd p this must coincide with "G' cyclic";
/// both routes are evaluated and compared. Non-p-groups are rejected.
bool cheng_condition(const FiniteGroup& g);

/// |G/Z| = |H/Z| * |C_G(H)/Z| for every H in [G/Z(G)]. Requires the Cheng
/// condition to hold.
bool index_factorization_check(const Analysis& a);

/// Sylow decomposition of a nilpotent group with the two decomposition
/// equivalences: increasing on C(G) <=> every factor has C = CD, and
/// increasing on S(G) <=> every factor satisfies the Cheng condition.
/// Non-nilpotent groups short-circuit: both left sides must already be
/// false.
struct SylowFactor {
  int prime = 0;
  int order = 0;
  bool c_equals_cd = false;
  bool cheng = false;
};
struct SylowRecord {
  bool nilpotent = false;
  std::vector<SylowFactor> factors;
  bool increasing_on_C = false;
  bool increasing_on_S = false;
  bool factors_c_equals_cd = false;
  bool factors_cheng = false;
  bool centralizer_decomposition_ok = false;  // inc on C <=> all factors C=CD
  bool lattice_decomposition_ok = false;      // inc on S <=> all factors Cheng
};
SylowRecord sylow_decomposition_verify(const Analysis& a,
                                       const Limits& limits = {});

/// Structure report on the centralizer lattice: maximal/minimal
/// centralizers, the quasi-antichain test, the covering and duality facts
/// that hold for every nonabelian group, and the p-group order facts when
/// C(G) = CD(G).
struct QuasiReport {
  bool abelian = false;  // degenerate report, everything below vacuous

  std::vector<int> maximal_centralizers;  // lattice indices
  std::vector<int> minimal_centralizers;
  bool maximal_are_element_centralizers = false;  // must hold
  bool union_covers_group = false;                // must hold
  bool atom_coatom_counts_equal = false;          // must hold
  bool maximal_count_greater_two = false;         // must hold
  bool all_maximal_abelian = false;
  bool qa = false;  // C(G) is a quasi-antichain
  int width = 0;
  bool qa_iff_all_maximal_abelian = false;  // must hold

  // p-group with C(G) = CD(G)
  std::optional<bool> ab_even;
  std::optional<long long> self_centralizing_order;  // p^((a+b)/2)
  std::optional<bool> self_centralizing_orders_ok;

  // nonabelian p-group with C(G) = CD(G) a quasi-antichain
  std::optional<bool> class_two;
  std::optional<bool> atom_orders_are_sqrt;  // |A|^2 == |G| * |Z(G)|
  std::optional<bool> width_is_prime_power_plus_one;  // w = p^b + 1, b <= a
  std::optional<int> width_exponent;                  // that b

  // CD(G) a quasi-antichain of width >= 3 with G in CD(G)
  std::optional<bool> cd_quasi_structure_ok;

  bool required_hold() const {
    if (abelian) return true;
    return maximal_are_element_centralizers && union_covers_group &&
           atom_coatom_counts_equal && maximal_count_greater_two &&
           qa_iff_all_maximal_abelian;
  }
};
QuasiReport quasi_antichain_report(const Analysis& a);

}  // namespace cdscope
