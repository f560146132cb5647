#pragma once

// Test-only oracles. Everything here recomputes results from first
// principles, independent of the enumeration / measure paths it is used to
// check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "cdscope/bitset.hpp"
#include "cdscope/group.hpp"

namespace oracle {

// every nonempty multiplication-closed subset of a finite group is a
// subgroup, so testing closure alone enumerates them all
inline std::vector<cdscope::Bitset> brute_force_subgroups(
    const cdscope::FiniteGroup& g) {
  const int n = g.order();
  std::vector<cdscope::Bitset> result;
  const std::uint64_t idbit = std::uint64_t{1} << g.identity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & idbit)) continue;  // a closed set always contains 1
    bool closed = true;
    for (std::uint64_t rest = mask; rest && closed; rest &= rest - 1) {
      const int a = std::countr_zero(rest);
      for (std::uint64_t rest2 = mask; rest2; rest2 &= rest2 - 1) {
        const int b = std::countr_zero(rest2);
        if (!((mask >> g.mul(a, b)) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    cdscope::Bitset bits(n);
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
      bits.set(std::countr_zero(rest));
    result.push_back(std::move(bits));
  }
  return result;
}

// |H| * #{ x : x commutes with every member of H }, straight off the table
inline long long measure_recompute(const cdscope::FiniteGroup& g,
                                   const cdscope::Bitset& h) {
  const auto members = h.members();
  long long cent = 0;
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (int y : members)
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) ++cent;
  }
  return static_cast<long long>(members.size()) * cent;
}

// breadth-first closure over permutation words, using raw image vectors
inline std::vector<std::vector<int>> perm_word_closure(
    std::vector<std::vector<int>> gens, int degree) {
  std::vector<std::vector<int>> elems;
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  elems.push_back(id);
  std::map<std::vector<int>, int> seen{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : gens) {
      std::vector<int> next(degree);
      for (int x = 0; x < degree; ++x) next[x] = gen[elems[i][x]];
      if (seen.emplace(next, static_cast<int>(elems.size())).second)
        elems.push_back(std::move(next));
    }
  }
  return elems;
}

// schoolbook polynomial product followed by long division, coefficients mod p
inline std::vector<int> poly_mul_rem(const std::vector<int>& a,
                                     const std::vector<int>& b,
                                     const std::vector<int>& modulus, int p) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  int dm = static_cast<int>(modulus.size()) - 1;
  while (dm > 0 && modulus[dm] == 0) --dm;
  for (int d = static_cast<int>(prod.size()) - 1; d >= dm; --d) {
    const int f = prod[d];
    if (f == 0) continue;
    for (int i = 0; i <= dm; ++i)
      prod[d - dm + i] = ((prod[d - dm + i] - f * modulus[i]) % p + p) % p;
  }
  prod.resize(dm);
  return prod;
}

// sorted multiset of measure values, for comparing groups up to the
// statistics the diagrams show
inline std::vector<long long> measure_multiset(const cdscope::FiniteGroup& g,
                                               const std::vector<cdscope::Bitset>& subgroups) {
  std::vector<long long> values;
  values.reserve(subgroups.size());
  for (const auto& h : subgroups) values.push_back(measure_recompute(g, h));
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace oracle
