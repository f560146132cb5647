#include "cdscope/group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <unordered_set>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

std::atomic<std::uint64_t> next_uid{1};

void require_same_group(const FiniteGroup& g, const Subgroup& h,
                        const char* what) {
  if (h.group_uid != g.uid()) {
    std::ostringstream os;
    os << what << ": subgroup does not belong to group '" << g.name() << "'";
    throw PreconditionError(os.str());
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int n, std::vector<int> mul,
                         std::vector<std::string> labels)
    : uid_(next_uid.fetch_add(1)),
      n_(n),
      mul_(std::move(mul)),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (n_ < 1) throw ValidationError("group order must be positive");
  if (mul_.size() != static_cast<std::size_t>(n_) * n_)
    throw ValidationError("multiplication table has wrong size");
  if (labels_.size() != static_cast<std::size_t>(n_))
    throw ValidationError("label count does not match group order");
  for (int v : mul_)
    if (v < 0 || v >= n_)
      throw ValidationError("multiplication table entry out of range");

  // locate the two-sided unit
  identity_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool unit = true;
    for (int x = 0; x < n_ && unit; ++x)
      unit = this->mul(e, x) == x && this->mul(x, e) == x;
    if (unit) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw ValidationError("table has no two-sided identity");

  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (this->mul(x, y) == identity_ && this->mul(y, x) == identity_) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) {
      std::ostringstream os;
      os << "element " << x << " has no two-sided inverse";
      throw ValidationError(os.str());
    }
  }

  std::unordered_set<std::string> seen;
  for (const auto& lab : labels_)
    if (!seen.insert(lab).second)
      throw ValidationError("duplicate element label '" + lab + "'");
}

int FiniteGroup::element_order(int x) const {
  int k = 1;
  int cur = x;
  while (cur != identity_) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

int FiniteGroup::power(int x, int k) const {
  int acc = identity_;
  for (int i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::commutator(int x, int y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

bool check_group_axioms(const FiniteGroup& g, std::string* why) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          if (why) {
            std::ostringstream os;
            os << "associativity fails at (" << a << "," << b << "," << c << ")";
            *why = os.str();
          }
          return false;
        }
  for (int x = 0; x < n; ++x) {
    if (g.mul(g.identity(), x) != x || g.mul(x, g.identity()) != x) {
      if (why) *why = "identity is not a two-sided unit";
      return false;
    }
    if (g.mul(x, g.inv(x)) != g.identity() || g.mul(g.inv(x), x) != g.identity()) {
      if (why) *why = "inverse table broken";
      return false;
    }
  }
  return true;
}

FiniteGroup close_generators(const std::vector<Permutation>& gens_in,
                             const Limits& limits, const std::string& name) {
  int degree = 1;
  for (const auto& p : gens_in) degree = std::max(degree, p.degree());
  if (degree > limits.max_points) {
    std::ostringstream os;
    os << "permutation degree " << degree << " exceeds the point cap "
       << limits.max_points;
    throw SizeError(os.str());
  }

  // pad everything to a common degree, then fix the application order
  std::vector<Permutation> gens;
  gens.reserve(gens_in.size());
  for (const auto& p : gens_in) {
    std::vector<std::vector<int>> cycles;
    // re-derive cycles by padding through images
    std::vector<int> img(degree);
    for (int x = 0; x < degree; ++x)
      img[x] = x < p.degree() ? p.apply(x) : x;
    std::vector<bool> seen(degree, false);
    for (int s = 0; s < degree; ++s) {
      if (seen[s] || img[s] == s) continue;
      std::vector<int> cyc;
      int x = s;
      do {
        cyc.push_back(x + 1);
        seen[x] = true;
        x = img[x];
      } while (x != s);
      cycles.push_back(std::move(cyc));
    }
    gens.push_back(Permutation::from_cycles(cycles, degree));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, int> index{{elems[0].images(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : gens) {
      Permutation next = elems[i] * gen;
      auto [it, inserted] = index.try_emplace(next.images(),
                                              static_cast<int>(elems.size()));
      (void)it;
      if (inserted) {
        elems.push_back(std::move(next));
        if (elems.size() > static_cast<std::size_t>(limits.max_order)) {
          std::ostringstream os;
          os << "generated group exceeds the order cap " << limits.max_order;
          throw SizeError(os.str());
        }
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          index.at((elems[a] * elems[b]).images());

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = elems[i].cycle_string();

  std::string gname = name;
  if (gname.empty()) {
    std::ostringstream os;
    os << "perm[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) os << ", ";
      os << gens[i].cycle_string();
    }
    os << "]";
    gname = os.str();
  }
  return FiniteGroup(gname, n, std::move(mul), std::move(labels));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Bitset b(g.order());
  b.set(g.identity());
  return Subgroup{std::move(b), 1, g.uid()};
}

Subgroup whole_group(const FiniteGroup& g) {
  Bitset b(g.order());
  for (int i = 0; i < g.order(); ++i) b.set(i);
  return Subgroup{std::move(b), g.order(), g.uid()};
}

Subgroup subgroup_from_members(const FiniteGroup& g, const Bitset& members) {
  if (members.capacity() != g.order())
    throw PreconditionError("membership bitset has wrong width");
  if (!members.test(g.identity()))
    throw ValidationError("subgroup must contain the identity");
  auto elems = members.members();
  for (int a : elems) {
    if (!members.test(g.inv(a)))
      throw ValidationError("set not closed under inversion");
    for (int b : elems)
      if (!members.test(g.mul(a, b)))
        throw ValidationError("set not closed under multiplication");
  }
  return Subgroup{members, static_cast<int>(elems.size()), g.uid()};
}

Subgroup generated_subgroup(const FiniteGroup& g, const Bitset& gens) {
  if (gens.capacity() != g.order())
    throw PreconditionError("generator bitset has wrong width");
  Bitset in(g.order());
  in.set(g.identity());
  std::vector<int> elems{g.identity()};
  const std::vector<int> gen_list = gens.members();
  // word closure: finite order makes inverses reachable by products alone
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gen_list) {
      int next = g.mul(elems[i], s);
      if (!in.test(next)) {
        in.set(next);
        elems.push_back(next);
      }
    }
  }
  return Subgroup{std::move(in), static_cast<int>(elems.size()), g.uid()};
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int x) {
  Bitset in(g.order());
  int cur = g.identity();
  int count = 0;
  do {
    in.set(cur);
    ++count;
    cur = g.mul(cur, x);
  } while (cur != g.identity());
  return Subgroup{std::move(in), count, g.uid()};
}

Subgroup centralizer(const FiniteGroup& g, const Bitset& s) {
  if (s.capacity() != g.order())
    throw PreconditionError("centralizer: bitset has wrong width");
  const auto fixed = s.members();
  Bitset in(g.order());
  int count = 0;
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (int y : fixed) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) {
      in.set(x);
      ++count;
    }
  }
  return Subgroup{std::move(in), count, g.uid()};
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  require_same_group(g, s, "centralizer");
  return centralizer(g, s.members);
}

Subgroup centralizer_of_element(const FiniteGroup& g, int x) {
  Bitset s(g.order());
  s.set(x);
  return centralizer(g, s);
}

Subgroup center(const FiniteGroup& g) {
  return centralizer(g, whole_group(g).members);
}

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h,
                        const Subgroup& k) {
  require_same_group(g, h, "normal_closure");
  require_same_group(g, k, "normal_closure");
  if (!h.members.subset_of(k.members))
    throw PreconditionError("normal_closure: H must be contained in K");

  const auto k_elems = k.members.members();
  Subgroup n = generated_subgroup(g, h.members);
  while (true) {
    Bitset conj = n.members;
    bool grew = false;
    for (int x : n.members.members()) {
      for (int t : k_elems) {
        int c = g.mul(g.mul(g.inv(t), x), t);
        if (!conj.test(c)) {
          conj.set(c);
          grew = true;
        }
      }
    }
    if (!grew) return n;
    n = generated_subgroup(g, conj);
  }
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  Bitset comms(g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int y = x; y < g.order(); ++y) comms.set(g.commutator(x, y));
  return generated_subgroup(g, comms);
}

Subgroup commutator_with_group(const FiniteGroup& g, int a) {
  Bitset comms(g.order());
  for (int x = 0; x < g.order(); ++x) comms.set(g.commutator(a, x));
  return generated_subgroup(g, comms);
}

bool is_abelian(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  require_same_group(g, h, "is_abelian");
  const auto elems = h.members.members();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  require_same_group(g, h, "is_normal");
  for (int t = 0; t < g.order(); ++t)
    for (int x : h.members.members())
      if (!h.members.test(g.mul(g.mul(g.inv(t), x), t))) return false;
  return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                              const std::string& name) {
  require_same_group(g, h, "subgroup_as_group");
  const auto elems = h.members.members();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i)
    local[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] = local[g.mul(elems[a], elems[b])];
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = g.label(elems[i]);
  return FiniteGroup(name, n, std::move(mul), std::move(labels));
}

}  // namespace cdscope
