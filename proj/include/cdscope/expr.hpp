#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cdscope/constructors.hpp"

namespace cdscope {

/// Source range of a node, byte offsets [begin,end) plus the 1-based
/// line/column of `begin`.
struct Span {
  int begin = 0;
  int end = 0;
  int line = 1;
  int col = 1;
};

/// One permutation written as concatenated cycles, e.g. "(1 2 3)(4 5)".
struct PermSpec {
  std::vector<std::vector<int>> cycles;  // 1-based points, disjoint
  Span span;
};

/// Abstract syntax for the group-expression language. Products associate
/// left; explicit parentheses are required to nest on the right.
struct GroupExpr {
  enum class Kind { Named, Heisenberg, Product, Generators };

  Kind kind = Kind::Named;
  Span span;

  // Named
  Family family = Family::Cyclic;
  int param = 0;

  // Heisenberg
  int p = 0;
  int n = 0;

  // Product
  std::unique_ptr<GroupExpr> lhs;
  std::unique_ptr<GroupExpr> rhs;

  // Generators
  std::vector<PermSpec> perms;
};

/// Grammar:
///   expr    := term { "x" term }
///   term    := named | heis | perms | "(" expr ")"
///   named   := ("S"|"A"|"D"|"Q"|"C") "(" integer ")"
///   heis    := "Heis" "(" integer "," integer ")"
///   perms   := "perm" "[" cycleperm { "," cycleperm } "]"
///   cycleperm := cycle { cycle }
///   cycle   := "(" integer { " " integer } ")"
/// Whitespace-insensitive; errors carry line/column.
GroupExpr parse(std::string_view input);

std::string to_string(const GroupExpr& e);

/// Structural equality ignoring spans.
bool expr_equal(const GroupExpr& a, const GroupExpr& b);

/// Dispatch to the constructors. Constructor errors are rethrown with the
/// offending node's source span prefixed, preserving the error type.
FiniteGroup evaluate(const GroupExpr& e, const Limits& limits = {});
FiniteGroup evaluate_text(std::string_view input, const Limits& limits = {});

/// Group order the expression will produce, without building it; used for
/// corpus budgeting. Generator lists are charged pessimistically at the
/// order cap.
long long predicted_order(const GroupExpr& e, const Limits& limits);

}  // namespace cdscope
