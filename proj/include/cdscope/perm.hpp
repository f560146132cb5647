#pragma once

#include <string>
#include <vector>

namespace cdscope {

/// A permutation of {1..m}, stored as a 0-based image vector.
/// Products compose left to right: (a * b) moves x to b[a[x]].
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);

  /// Build from disjoint cycles in 1-based notation. Throws ValidationError
  /// if a point repeats (not a bijection) or lies outside 1..degree.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const { return img_ < other.img_; }

  /// Disjoint-cycle form with fixed points omitted; identity prints as "()".
  std::string cycle_string() const;

  const std::vector<int>& images() const { return img_; }

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

}  // namespace cdscope
