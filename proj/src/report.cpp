#include "cdscope/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

// ---------------------------------------------------------------------------
// structure names

// partition of cyclic-factor exponents for the p-part of an abelian group,
// recovered from the counts of solutions of x^{p^k} = 1
std::vector<int> primary_partition(const std::vector<int>& elem_orders, int p) {
  std::vector<int> m;  // m[k] = log_p #{ x : x^{p^k} = 1 }
  m.push_back(0);
  for (int k = 1;; ++k) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    int count = 0;
    for (int o : elem_orders)
      if (pk % o == 0) ++count;
    int logc = 0;
    while (count > 1) {
      count /= p;
      ++logc;
    }
    m.push_back(logc);
    if (m[k] == m[k - 1]) break;  // saturated
  }
  // conjugate partition: lambda'_k = m_k - m_{k-1}
  std::vector<int> conj;
  for (std::size_t k = 1; k < m.size(); ++k)
    if (m[k] - m[k - 1] > 0) conj.push_back(m[k] - m[k - 1]);
  // transpose back to the exponent partition: lambda_i = #{ k : conj_k >= i }
  std::vector<int> lambda;
  int max_part = conj.empty() ? 0 : *std::max_element(conj.begin(), conj.end());
  for (int i = 1; i <= max_part; ++i) {
    int cnt = 0;
    for (std::size_t k = 0; k < conj.size(); ++k)
      if (conj[k] >= i) ++cnt;
    lambda.push_back(cnt);
  }
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

std::string abelian_name(const std::vector<int>& elem_orders, int order) {
  // invariant factors, largest first
  std::vector<int> primes;
  int rest = order;
  for (int p = 2; p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  std::vector<std::vector<int>> partitions;
  std::size_t width = 0;
  for (int p : primes) {
    partitions.push_back(primary_partition(elem_orders, p));
    width = std::max(width, partitions.back().size());
  }
  std::vector<long long> factors(width, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t j = 0; j < partitions[pi].size(); ++j) {
      long long pk = 1;
      for (int i = 0; i < partitions[pi][j]; ++i) pk *= primes[pi];
      factors[j] *= pk;
    }
  if (factors.size() == 2 && factors[0] == 2 && factors[1] == 2) return "K4";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!first) os << "x";
    os << "C" << factors[i];
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

std::string fallback_name(int index, int order) {
  std::ostringstream os;
  os << "H" << index << ":o" << order;
  return os.str();
}

}  // namespace

std::string display_name(const FiniteGroup& g, const SubgroupLattice& l, int i) {
  const Subgroup& h = l.at(i);
  if (h.order == g.order()) return g.name();
  if (h.order == 1) return "1";

  const auto elems = h.members.members();
  std::vector<int> orders;
  orders.reserve(elems.size());
  int max_order = 1;
  int involutions = 0;
  for (int x : elems) {
    int o = g.element_order(x);
    orders.push_back(o);
    max_order = std::max(max_order, o);
    if (o == 2) ++involutions;
  }

  if (is_abelian(g, h)) {
    if (max_order == h.order) {
      std::ostringstream os;
      os << "C" << h.order;
      return os.str();
    }
    return abelian_name(orders, h.order);
  }

  const int n = h.order;
  if (n % 2 == 0 && n / 2 > 2 && is_prime(n / 2)) {
    std::ostringstream os;  // the only nonabelian group of order 2p
    os << "D" << n;
    return os.str();
  }
  if (n == 6) return "S3";
  if (n == 8) return involutions == 1 ? "Q8" : "D8";
  if (n == 12) {
    if (involutions == 3) return "A4";
    if (involutions == 7) return "D12";
    if (involutions == 1) return "Dic3";
  }
  if (n == 16 && max_order == 8) {
    if (involutions == 9) return "D16";
    if (involutions == 1) return "Q16";
    if (involutions == 5) return "SD16";
  }
  return fallback_name(i, n);
}

// ---------------------------------------------------------------------------
// documents

namespace {

ordered_json witness_json(const Analysis& a, const MonotoneWitness& w) {
  ordered_json j;
  j["lower"] = w.lower;
  j["upper"] = w.upper;
  j["lower_label"] = display_name(a.group, a.lattice, w.lower);
  j["upper_label"] = display_name(a.group, a.lattice, w.upper);
  j["m_lower"] = w.m_lower;
  j["m_upper"] = w.m_upper;
  return j;
}

}  // namespace

ordered_json analysis_to_json(const Analysis& a) {
  ordered_json j;
  j["group"] = {{"name", a.group.name()},
                {"order", a.group.order()},
                {"center_order", a.center_order()}};

  ordered_json subs = ordered_json::array();
  for (int i = 0; i < a.lattice.size(); ++i) {
    ordered_json s;
    s["id"] = i;
    s["label"] = display_name(a.group, a.lattice, i);
    s["order"] = a.lattice.at(i).order;
    s["centralizer_id"] = a.measure.centralizer_index[i];
    s["measure"] = a.measure.values[i];
    s["in_cd"] = a.cd.contains(i);
    s["in_cent"] = a.cent.sel.contains(i);
    s["subnormal"] = static_cast<bool>(a.subnormal[i]);
    s["normal"] = static_cast<bool>(a.normal[i]);
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);

  ordered_json hasse = ordered_json::array();
  for (const auto& [lo, hi] : a.lattice.hasse())
    hasse.push_back(ordered_json::array({lo, hi}));
  j["hasse"] = std::move(hasse);

  ordered_json flags;
  flags["increasing_on_S"] = a.increasing_on_S;
  flags["increasing_on_C"] = a.increasing_on_C;
  flags["decreasing_on_S"] = a.decreasing_on_S;
  flags["cd_equals_interval"] = a.cd_equals_interval;
  flags["cd_equals_cent"] = a.cd_equals_cent;
  if (a.cheng.has_value()) flags["cheng"] = *a.cheng;
  flags["nilpotent"] = a.nilpotency.nilpotent;
  j["flags"] = std::move(flags);

  ordered_json numbers;
  numbers["k"] = a.image.k;
  numbers["image_size"] = a.image.image_size;
  if (a.cent_qa.is_qa) numbers["width"] = a.cent_qa.width;
  if (a.exp_a.has_value()) numbers["a"] = *a.exp_a;
  if (a.exp_b.has_value()) numbers["b"] = *a.exp_b;
  j["numbers"] = std::move(numbers);

  if (a.increasing_witness.has_value())
    j["witness"] = witness_json(a, *a.increasing_witness);
  return j;
}

std::string analysis_to_table(const Analysis& a) {
  std::ostringstream os;
  os << "group: " << a.group.name() << "   order: " << a.group.order()
     << "   center order: " << a.center_order() << "\n";
  os << std::left << std::setw(5) << "id" << std::setw(14) << "label"
     << std::right << std::setw(7) << "order" << std::setw(9) << "|C(H)|"
     << std::setw(9) << "m" << "  " << std::left << std::setw(4) << "cd"
     << std::setw(6) << "cent" << std::setw(4) << "sn" << std::setw(4) << "nl"
     << "\n";
  for (int i = 0; i < a.lattice.size(); ++i) {
    os << std::left << std::setw(5) << i << std::setw(14)
       << display_name(a.group, a.lattice, i) << std::right << std::setw(7)
       << a.lattice.at(i).order << std::setw(9)
       << a.lattice.at(a.measure.centralizer_index[i]).order << std::setw(9)
       << a.measure.values[i] << "  " << std::left << std::setw(4)
       << (a.cd.contains(i) ? "*" : ".") << std::setw(6)
       << (a.cent.sel.contains(i) ? "*" : ".") << std::setw(4)
       << (a.subnormal[i] ? "*" : ".") << std::setw(4)
       << (a.normal[i] ? "*" : ".") << "\n";
  }
  os << "image:";
  for (long long v : a.measure.image) os << " " << v;
  os << "\nflags: increasing_on_S=" << (a.increasing_on_S ? "true" : "false")
     << " increasing_on_C=" << (a.increasing_on_C ? "true" : "false")
     << " decreasing_on_S=" << (a.decreasing_on_S ? "true" : "false")
     << " cd_equals_interval=" << (a.cd_equals_interval ? "true" : "false")
     << " cd_equals_cent=" << (a.cd_equals_cent ? "true" : "false");
  if (a.cheng.has_value()) os << " cheng=" << (*a.cheng ? "true" : "false");
  os << " nilpotent=" << (a.nilpotency.nilpotent ? "true" : "false") << "\n";
  os << "numbers: k=" << a.image.k << " image_size=" << a.image.image_size;
  if (a.cent_qa.is_qa) os << " width=" << a.cent_qa.width;
  if (a.exp_a.has_value()) os << " a=" << *a.exp_a;
  if (a.exp_b.has_value()) os << " b=" << *a.exp_b;
  os << "\n";
  if (a.increasing_witness.has_value()) {
    const auto& w = *a.increasing_witness;
    os << "witness: m(" << display_name(a.group, a.lattice, w.lower) << ")="
       << w.m_lower << " > m(" << display_name(a.group, a.lattice, w.upper)
       << ")=" << w.m_upper << " with H" << w.lower << " <= H" << w.upper
       << "\n";
  }
  return os.str();
}

namespace {

int fiber_class(const Analysis& a, int i) {
  for (std::size_t f = 0; f < a.measure.fibers.size(); ++f)
    if (a.measure.fibers[f].first == a.measure.values[i])
      return static_cast<int>(f);
  return 0;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\' || c == '|' || c == '{' || c == '}' || c == '<' ||
        c == '>')
      out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string lattice_to_dot(const Analysis& a, Annotate annotate) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(a.group.name()) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=record];\n";
  for (int i = 0; i < a.lattice.size(); ++i) {
    os << "  s" << i << " [label=\""
       << dot_escape(display_name(a.group, a.lattice, i)) << "|"
       << a.lattice.at(i).order << "|" << a.measure.values[i] << "\"";
    if (annotate == Annotate::Fiber) {
      int cls = fiber_class(a, i);
      os << ", style=filled, fillcolor=\"/pastel19/" << (cls % 9) + 1 << "\"";
    }
    os << "];\n";
  }
  for (const auto& [lo, hi] : a.lattice.hasse())
    os << "  s" << lo << " -> s" << hi << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json lattice_to_json(const Analysis& a, Annotate annotate) {
  ordered_json j;
  j["group"] = {{"name", a.group.name()},
                {"order", a.group.order()},
                {"center_order", a.center_order()}};
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < a.lattice.size(); ++i) {
    ordered_json n;
    n["id"] = i;
    n["label"] = display_name(a.group, a.lattice, i);
    n["order"] = a.lattice.at(i).order;
    n["measure"] = a.measure.values[i];
    if (annotate == Annotate::Fiber) n["fiber"] = fiber_class(a, i);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& [lo, hi] : a.lattice.hasse())
    edges.push_back(ordered_json::array({lo, hi}));
  j["edges"] = std::move(edges);
  return j;
}

// ---------------------------------------------------------------------------
// corpus

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long factorial_capped(int n, long long cap) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return f;
  }
  return f;
}

void expand_families(int bound, int line, CorpusSpec& spec) {
  for (int n = 1; n <= bound; ++n) {
    std::ostringstream os;
    os << "C(" << n << ")";
    spec.entries.push_back({os.str(), line});
  }
  for (int n = 2; n <= bound; n += 2) {
    std::ostringstream os;
    os << "D(" << n << ")";
    spec.entries.push_back({os.str(), line});
  }
  for (int n = 8; n <= bound; n *= 2) {
    std::ostringstream os;
    os << "Q(" << n << ")";
    spec.entries.push_back({os.str(), line});
  }
  for (int n = 1; factorial_capped(n, bound) <= bound; ++n) {
    std::ostringstream os;
    os << "S(" << n << ")";
    spec.entries.push_back({os.str(), line});
  }
  for (int n = 1; std::max<long long>(1, factorial_capped(n, 2LL * bound) / 2) <= bound; ++n) {
    std::ostringstream os;
    os << "A(" << n << ")";
    spec.entries.push_back({os.str(), line});
  }
}

}  // namespace

CorpusSpec parse_corpus(std::string_view content, const Limits& limits) {
  CorpusSpec spec;
  std::string text(content);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '@') {
      std::istringstream ls(line.substr(1));
      std::string word;
      ls >> word;
      int bound = 0;
      if (word != "families" || !(ls >> bound) || bound < 1) {
        std::ostringstream os;
        os << "corpus line " << lineno << ": unknown directive '" << line << "'";
        throw ValidationError(os.str());
      }
      expand_families(bound, lineno, spec);
      continue;
    }
    spec.entries.push_back({line, lineno});
  }

  long long total = 0;
  for (const auto& entry : spec.entries) {
    GroupExpr e;
    try {
      e = parse(entry.text);
    } catch (const ParseError& pe) {
      std::ostringstream os;
      os << "corpus line " << entry.line << ": " << pe.what();
      throw ValidationError(os.str());
    }
    total += predicted_order(e, limits);
    if (total > limits.corpus_order_budget) {
      std::ostringstream os;
      os << "corpus predicted order sum exceeds the budget of "
         << limits.corpus_order_budget;
      throw SizeError(os.str());
    }
  }
  return spec;
}

CorpusSpec load_corpus_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read corpus file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), limits);
}

CorpusSpec default_corpus() {
  static const char* exprs[] = {
      "S(3)",           "A(4)",
      "S(4)",           "D(8)",
      "D(16)",          "Q(8)",
      "Q(16)",          "C(1)",
      "C(2)",           "C(3)",
      "C(4)",           "C(5)",
      "C(6)",           "C(7)",
      "C(8)",           "C(9)",
      "C(10)",          "C(11)",
      "C(12)",          "Heis(2,1)",
      "Heis(3,1)",      "Heis(5,1)",
      "Heis(2,2)",      "D(8) x D(8)",
      "Q(8) x C(3)",    "D(8) x C(3)",
      "C(2) x C(2) x C(2)", "C(3) x C(3)",
  };
  CorpusSpec spec;
  int line = 0;
  for (const char* e : exprs) spec.entries.push_back({e, ++line});
  return spec;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "increasing", "centralizers",      "poset",     "decreasing-trivial",
      "image-bound", "cheng-iff",        "sylow",     "product",
      "quasi",      "subnormal"};
  return ids;
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

TheoremOutcome outcome_increasing(const Analysis& a) {
  TheoremOutcome o{"increasing", false, true, ""};
  IncreasingRecord r = verify_increasing(a);
  o.pass = r.agree();
  std::ostringstream os;
  os << "equivalent, value=" << bool_str(r.increasing_on_S);
  if (!r.increasing_on_S && r.witness.has_value()) {
    os << ", witness H" << r.witness->lower << "<=H" << r.witness->upper
       << " with m " << r.witness->m_lower << ">" << r.witness->m_upper;
  }
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_centralizers(const Analysis& a) {
  TheoremOutcome o{"centralizers", false, true, ""};
  CentralizerRecord r = verify_centralizers(a);
  o.pass = true;  // verify_centralizers throws on violation
  std::ostringstream os;
  os << "increasing_on_C=" << bool_str(r.increasing_on_C)
     << " cd_equals_cent=" << bool_str(r.cd_equals_cent)
     << " nilpotent=" << bool_str(r.nilpotent);
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_poset(const Analysis& a) {
  TheoremOutcome o{"poset", false, true, ""};
  PosetRecord rc = verify_poset(a, a.cent.sel);
  PosetRecord rs = verify_poset(a, full_selection(a.lattice));
  o.pass = true;  // violations throw
  std::ostringstream os;
  os << "C(G): increasing=" << bool_str(rc.increasing_on_sel)
     << "; S(G): increasing=" << bool_str(rs.increasing_on_sel);
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_decreasing(const Analysis& a) {
  TheoremOutcome o{"decreasing-trivial", false, true, ""};
  bool trivial = a.group.order() == 1;
  o.pass = a.decreasing_on_S == trivial;
  std::ostringstream os;
  os << "decreasing=" << bool_str(a.decreasing_on_S) << " trivial="
     << bool_str(trivial);
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_image(const Analysis& a) {
  TheoremOutcome o{"image-bound", false, true, ""};
  o.pass = a.image.bound_ok && a.image.chain_present;
  if (a.image.equality_when_increasing.has_value())
    o.pass = o.pass && *a.image.equality_when_increasing;
  std::ostringstream os;
  os << "image_size=" << a.image.image_size << " k=" << a.image.k;
  if (a.image.equality_when_increasing.has_value())
    os << " equality=" << bool_str(*a.image.equality_when_increasing);
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_cheng(const Analysis& a) {
  TheoremOutcome o{"cheng-iff", false, true, ""};
  if (!a.cheng.has_value()) {
    o.applicable = false;
    o.pass = true;
    o.detail = "not a prime-power order group";
    return o;
  }
  bool iff = *a.cheng == a.increasing_on_S;
  bool factorization = true;
  if (*a.cheng) factorization = index_factorization_check(a);
  o.pass = iff && factorization;
  std::ostringstream os;
  os << "cheng=" << bool_str(*a.cheng) << " increasing_on_S="
     << bool_str(a.increasing_on_S);
  if (*a.cheng) os << " index_factorization=" << bool_str(factorization);
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_sylow(const Analysis& a, const Limits& limits) {
  TheoremOutcome o{"sylow", false, true, ""};
  SylowRecord r = sylow_decomposition_verify(a, limits);
  o.pass = r.centralizer_decomposition_ok && r.lattice_decomposition_ok;
  std::ostringstream os;
  if (!r.nilpotent) {
    os << "not nilpotent; both monotonicity statements false";
  } else {
    os << "factors:";
    for (const auto& f : r.factors)
      os << " p=" << f.prime << ",o=" << f.order << ",C=CD="
         << bool_str(f.c_equals_cd) << ",cheng=" << bool_str(f.cheng);
  }
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_product(const Analysis& a, const GroupExpr* expr,
                               const Limits& limits) {
  TheoremOutcome o{"product", false, true, ""};
  if (expr == nullptr || expr->kind != GroupExpr::Kind::Product) {
    o.applicable = false;
    o.pass = true;
    o.detail = "not a product expression";
    return o;
  }
  Analysis left = analyze_group(evaluate(*expr->lhs, limits), limits);
  Analysis right = analyze_group(evaluate(*expr->rhs, limits), limits);

  auto decomposes = [&](const PosetSelection& whole, const PosetSelection& ls,
                        const PosetSelection& rs) {
    std::vector<Bitset> expected;
    for (int i : ls.indices)
      for (int j : rs.indices)
        expected.push_back(product_subgroup(a.group, left.group, right.group,
                                            left.lattice.at(i),
                                            right.lattice.at(j))
                               .members);
    if (expected.size() != whole.indices.size()) return false;
    for (const auto& b : expected) {
      int idx = a.lattice.index_of(b);
      if (idx < 0 || !whole.contains(idx)) return false;
    }
    return true;
  };

  bool cent_ok = decomposes(a.cent.sel, left.cent.sel, right.cent.sel);
  bool cd_ok = decomposes(a.cd, left.cd, right.cd);
  o.pass = cent_ok && cd_ok;
  std::ostringstream os;
  os << "C: " << left.cent.sel.size() << "*" << right.cent.sel.size() << "="
     << a.cent.sel.size() << " " << bool_str(cent_ok) << "; CD: "
     << left.cd.size() << "*" << right.cd.size() << "=" << a.cd.size() << " "
     << bool_str(cd_ok);
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_quasi(const Analysis& a) {
  TheoremOutcome o{"quasi", false, true, ""};
  QuasiReport r = quasi_antichain_report(a);
  if (r.abelian) {
    o.applicable = false;
    o.pass = true;
    o.detail = "abelian: degenerate centralizer lattice";
    return o;
  }
  bool pass = r.required_hold();
  auto opt_holds = [&pass](const std::optional<bool>& v) {
    if (v.has_value()) pass = pass && *v;
  };
  opt_holds(r.ab_even);
  opt_holds(r.self_centralizing_orders_ok);
  opt_holds(r.class_two);
  opt_holds(r.atom_orders_are_sqrt);
  opt_holds(r.width_is_prime_power_plus_one);
  opt_holds(r.cd_quasi_structure_ok);
  o.pass = pass;
  std::ostringstream os;
  os << "max_centralizers=" << r.maximal_centralizers.size() << " qa="
     << bool_str(r.qa);
  if (r.qa) os << " width=" << r.width;
  os << " union_covers=" << bool_str(r.union_covers_group);
  if (r.self_centralizing_order.has_value())
    os << " self_centralizing_order=" << *r.self_centralizing_order;
  o.detail = os.str();
  return o;
}

TheoremOutcome outcome_subnormal(const Analysis& a) {
  TheoremOutcome o{"subnormal", false, true, ""};
  bool cd_in_sn = true;
  for (int i : a.cd.indices) cd_in_sn = cd_in_sn && a.subnormal[i];

  // Wielandt: the subnormal subgroups are join-closed
  std::vector<int> sn;
  for (int i = 0; i < a.lattice.size(); ++i)
    if (a.subnormal[i]) sn.push_back(i);
  bool join_closed = true;
  for (std::size_t x = 0; x < sn.size() && join_closed; ++x)
    for (std::size_t y = x + 1; y < sn.size() && join_closed; ++y)
      join_closed = a.subnormal[join(a.group, a.lattice, sn[x], sn[y])];

  bool all_sn = static_cast<int>(sn.size()) == a.lattice.size();
  bool cent_sn = true;
  for (int i : a.cent.sel.indices) cent_sn = cent_sn && a.subnormal[i];
  bool three_way = (a.nilpotency.nilpotent == all_sn) && (all_sn == cent_sn);

  o.pass = cd_in_sn && join_closed && three_way;
  std::ostringstream os;
  os << "cd_subnormal=" << bool_str(cd_in_sn) << " wielandt="
     << bool_str(join_closed) << " nilpotent=" << bool_str(a.nilpotency.nilpotent)
     << " all_subnormal=" << bool_str(all_sn) << " centralizers_subnormal="
     << bool_str(cent_sn);
  o.detail = os.str();
  return o;
}

}  // namespace

TheoremOutcome run_theorem(const std::string& id, const Analysis& a,
                           const GroupExpr* expr, const Limits& limits) {
  try {
    if (id == "increasing") return outcome_increasing(a);
    if (id == "centralizers") return outcome_centralizers(a);
    if (id == "poset") return outcome_poset(a);
    if (id == "decreasing-trivial") return outcome_decreasing(a);
    if (id == "image-bound") return outcome_image(a);
    if (id == "cheng-iff") return outcome_cheng(a);
    if (id == "sylow") return outcome_sylow(a, limits);
    if (id == "product") return outcome_product(a, expr, limits);
    if (id == "quasi") return outcome_quasi(a);
    if (id == "subnormal") return outcome_subnormal(a);
  } catch (const TheoremViolation& tv) {
    return TheoremOutcome{id, false, true, tv.what()};
  }
  throw ValidationError("unknown theorem id '" + id + "' (expected one of: "
                        "increasing, centralizers, poset, decreasing-trivial, "
                        "image-bound, cheng-iff, sylow, product, quasi, "
                        "subnormal)");
}

CorpusRunResult run_corpus(const CorpusSpec& spec, int jobs,
                           const Limits& limits) {
  if (jobs < 1) throw ValidationError("jobs must be at least 1");
  CorpusRunResult result;
  result.entries.resize(spec.entries.size());

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= spec.entries.size()) return;
      CorpusEntryResult& r = result.entries[i];
      r.expr = spec.entries[i].text;
      try {
        GroupExpr e = parse(spec.entries[i].text);
        Analysis a = analyze_group(evaluate(e, limits), limits);
        r.group_name = a.group.name();
        r.order = a.group.order();
        for (const auto& id : theorem_ids())
          r.outcomes.push_back(run_theorem(id, a, &e, limits));
      } catch (const SizeError& err) {
        r.error = err.what();
        r.error_exit = 3;
      } catch (const TheoremViolation& err) {
        r.error = err.what();
        r.error_exit = 1;
      } catch (const Error& err) {
        r.error = err.what();
        r.error_exit = 2;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, static_cast<int>(spec.entries.size()));
    n = std::max(n, 1);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int exit_code = 0;
  for (const auto& r : result.entries) {
    if (!r.error.empty()) {
      exit_code = std::max(exit_code, r.error_exit);
      continue;
    }
    for (const auto& o : r.outcomes)
      if (!o.pass) exit_code = std::max(exit_code, 1);
  }
  result.exit_code = exit_code;
  return result;
}

ordered_json corpus_to_json(const CorpusRunResult& r) {
  ordered_json j;
  ordered_json entries = ordered_json::array();
  int failures = 0;
  for (const auto& e : r.entries) {
    ordered_json je;
    je["expr"] = e.expr;
    if (!e.error.empty()) {
      je["error"] = e.error;
      je["exit"] = e.error_exit;
      ++failures;
    } else {
      je["group"] = {{"name", e.group_name}, {"order", e.order}};
      ordered_json th;
      bool all = true;
      for (const auto& o : e.outcomes) {
        th[o.id] = {{"pass", o.pass},
                    {"applicable", o.applicable},
                    {"detail", o.detail}};
        all = all && o.pass;
      }
      je["theorems"] = std::move(th);
      if (!all) ++failures;
    }
    entries.push_back(std::move(je));
  }
  j["corpus"] = std::move(entries);
  j["summary"] = {{"entries", r.entries.size()},
                  {"failures", failures},
                  {"exit", r.exit_code}};
  return j;
}

int verify_over_corpus(const std::string& theorem_id, const CorpusSpec& spec,
                       const Limits& limits, std::ostream& out) {
  bool known = false;
  for (const auto& id : theorem_ids()) known = known || id == theorem_id;
  if (!known)
    throw ValidationError("unknown theorem id '" + theorem_id + "'");

  int passed = 0, failed = 0;
  for (const auto& entry : spec.entries) {
    GroupExpr e = parse(entry.text);
    Analysis a = analyze_group(evaluate(e, limits), limits);
    TheoremOutcome o = run_theorem(theorem_id, a, &e, limits);
    if (o.pass) {
      ++passed;
      out << "PASS " << entry.text << ": " << o.detail << "\n";
    } else {
      ++failed;
      out << "FAIL " << entry.text << ": " << o.detail << "\n";
    }
  }
  out << passed << "/" << (passed + failed) << " PASS\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace cdscope
