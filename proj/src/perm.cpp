#include "cdscope/perm.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "cdscope/errors.hpp"

namespace cdscope {

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles,
                                     int degree) {
  if (degree < 0) throw ValidationError("permutation degree must be nonnegative");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> seen(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree) {
        std::ostringstream os;
        os << "cycle point " << from << " outside 1.." << degree;
        throw ValidationError(os.str());
      }
      if (seen[from - 1]) {
        std::ostringstream os;
        os << "point " << from << " repeats across cycles (not a bijection)";
        throw ValidationError(os.str());
      }
      seen[from - 1] = true;
      img[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[x] = other.img_[img_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
  return Permutation(std::move(img));
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(img_.size(), false);
  bool wrote = false;
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (done[start] || img_[start] == static_cast<int>(start)) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << (x + 1);
      done[x] = true;
      x = static_cast<std::size_t>(img_[x]);
      first = false;
    } while (x != start);
    os << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return os.str();
}

}  // namespace cdscope
