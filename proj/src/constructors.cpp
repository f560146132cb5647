#include "cdscope/constructors.hpp"

#include <sstream>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

void check_order_cap(long long order, const Limits& limits, const char* what) {
  if (order > limits.max_order) {
    std::ostringstream os;
    os << what << " of order " << order << " exceeds the order cap "
       << limits.max_order;
    throw SizeError(os.str());
  }
}

std::string rot_label(int i) {
  if (i == 0) return "1";
  if (i == 1) return "r";
  std::ostringstream os;
  os << "r^" << i;
  return os.str();
}

std::string refl_label(int i) {
  if (i == 0) return "s";
  std::ostringstream os;
  os << rot_label(i) << "*s";
  return os.str();
}

FiniteGroup make_cyclic(int order, const Limits& limits) {
  if (order < 1) throw ValidationError("cyclic group order must be >= 1");
  check_order_cap(order, limits, "cyclic group");
  const int n = order;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      labels[i] = "1";
    else if (i == 1)
      labels[i] = "g";
    else {
      std::ostringstream os;
      os << "g^" << i;
      labels[i] = os.str();
    }
  }
  std::ostringstream name;
  name << "C" << n;
  return FiniteGroup(name.str(), n, std::move(mul), std::move(labels));
}

// elements r^i s^e with s^2 = 1, s r s = r^{-1}; index e*half + i
FiniteGroup make_dihedral(int order, const Limits& limits) {
  if (order < 2 || order % 2 != 0)
    throw ValidationError("dihedral parameter is the group order and must be even, >= 2");
  check_order_cap(order, limits, "dihedral group");
  const int half = order / 2;
  const int n = order;
  auto idx = [half](int i, int e) { return e * half + i; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i = 0; i < half; ++i)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j = 0; j < half; ++j) {
          int a = idx(i, e1), b = idx(j, e2);
          int k = e1 == 0 ? (i + j) % half : ((i - j) % half + half) % half;
          mul[static_cast<std::size_t>(a) * n + b] = idx(k, e1 ^ e2);
        }
  std::vector<std::string> labels(n);
  for (int i = 0; i < half; ++i) {
    labels[idx(i, 0)] = rot_label(i);
    labels[idx(i, 1)] = refl_label(i);
  }
  std::ostringstream name;
  name << "D" << n;
  return FiniteGroup(name.str(), n, std::move(mul), std::move(labels));
}

// elements r^i s^e with r^{2^{m-1}} = 1, s^2 = r^{2^{m-2}}, s^-1 r s = r^-1
FiniteGroup make_generalized_quaternion(int order, const Limits& limits) {
  bool pow2 = order >= 8 && (order & (order - 1)) == 0;
  if (!pow2)
    throw ValidationError(
        "generalized quaternion parameter is the group order and must be a power of two >= 8");
  check_order_cap(order, limits, "generalized quaternion group");
  const int half = order / 2;
  const int n = order;
  auto idx = [half](int i, int e) { return e * half + i; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i = 0; i < half; ++i)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j = 0; j < half; ++j) {
          int a = idx(i, e1), b = idx(j, e2);
          int k;
          int e = e1 ^ e2;
          if (e1 == 0) {
            k = (i + j) % half;
          } else {
            k = ((i - j) % half + half) % half;
            if (e2 == 1) k = (k + half / 2) % half;  // s^2 = r^{half/2}
          }
          mul[static_cast<std::size_t>(a) * n + b] = idx(k, e);
        }
  std::vector<std::string> labels(n);
  for (int i = 0; i < half; ++i) {
    labels[idx(i, 0)] = rot_label(i);
    labels[idx(i, 1)] = refl_label(i);
  }
  std::ostringstream name;
  name << "Q" << n;
  return FiniteGroup(name.str(), n, std::move(mul), std::move(labels));
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

FiniteGroup make_symmetric(int points, const Limits& limits) {
  if (points < 1) throw ValidationError("symmetric group degree must be >= 1");
  check_order_cap(factorial(points), limits, "symmetric group");
  std::vector<Permutation> gens;
  if (points >= 2)
    gens.push_back(Permutation::from_cycles({{1, 2}}, points));
  if (points >= 3) {
    std::vector<int> full(points);
    for (int i = 0; i < points; ++i) full[i] = i + 1;
    gens.push_back(Permutation::from_cycles({full}, points));
  }
  std::ostringstream name;
  name << "S" << points;
  return close_generators(gens, limits, name.str());
}

FiniteGroup make_alternating(int points, const Limits& limits) {
  if (points < 1) throw ValidationError("alternating group degree must be >= 1");
  check_order_cap(points < 2 ? 1 : factorial(points) / 2, limits,
                  "alternating group");
  std::vector<Permutation> gens;
  if (points >= 3) gens.push_back(Permutation::from_cycles({{1, 2, 3}}, points));
  if (points >= 4) {
    std::vector<int> cyc;
    if (points % 2 == 1) {
      for (int i = 1; i <= points; ++i) cyc.push_back(i);
    } else {
      for (int i = 2; i <= points; ++i) cyc.push_back(i);
    }
    gens.push_back(Permutation::from_cycles({cyc}, points));
  }
  std::ostringstream name;
  name << "A" << points;
  return close_generators(gens, limits, name.str());
}

}  // namespace

const char* family_letter(Family f) {
  switch (f) {
    case Family::Cyclic: return "C";
    case Family::Dihedral: return "D";
    case Family::GeneralizedQuaternion: return "Q";
    case Family::Symmetric: return "S";
    case Family::Alternating: return "A";
  }
  return "?";
}

FiniteGroup make_named(Family family, int param, const Limits& limits) {
  switch (family) {
    case Family::Cyclic: return make_cyclic(param, limits);
    case Family::Dihedral: return make_dihedral(param, limits);
    case Family::GeneralizedQuaternion:
      return make_generalized_quaternion(param, limits);
    case Family::Symmetric: return make_symmetric(param, limits);
    case Family::Alternating: return make_alternating(param, limits);
  }
  throw ValidationError("unknown family");
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           const Limits& limits) {
  const long long order = static_cast<long long>(g1.order()) * g2.order();
  check_order_cap(order, limits, "direct product");
  const int n1 = g1.order(), n2 = g2.order();
  const int n = static_cast<int>(order);
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          int a = a1 * n2 + a2, b = b1 * n2 + b2;
          mul[static_cast<std::size_t>(a) * n + b] =
              g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
        }
  std::vector<std::string> labels(n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      labels[a1 * n2 + a2] = "(" + g1.label(a1) + "," + g2.label(a2) + ")";
  return FiniteGroup(g1.name() + " x " + g2.name(), n, std::move(mul),
                     std::move(labels));
}

Subgroup product_subgroup(const FiniteGroup& product, const FiniteGroup& g1,
                          const FiniteGroup& g2, const Subgroup& a,
                          const Subgroup& b) {
  if (a.group_uid != g1.uid() || b.group_uid != g2.uid())
    throw PreconditionError("product_subgroup: factors do not match");
  if (product.order() != g1.order() * g2.order())
    throw PreconditionError("product_subgroup: group is not the product");
  Bitset members(product.order());
  for (int x : a.members.members())
    for (int y : b.members.members()) members.set(x * g2.order() + y);
  return Subgroup{std::move(members), a.order * b.order, product.uid()};
}

Subgroup embed_left(const FiniteGroup& product, const FiniteGroup& g1,
                    const FiniteGroup& g2, const Subgroup& a) {
  return product_subgroup(product, g1, g2, a, trivial_subgroup(g2));
}

Subgroup embed_right(const FiniteGroup& product, const FiniteGroup& g1,
                     const FiniteGroup& g2, const Subgroup& b) {
  return product_subgroup(product, g1, g2, trivial_subgroup(g1), b);
}

FiniteGroup heisenberg(int p, int n, const Limits& limits) {
  FieldSpec field = FieldSpec::make(p, n);  // validates the (p, n) pair
  const int q = field.q();
  const long long order = static_cast<long long>(q) * q * q;
  check_order_cap(order, limits, "Heisenberg group");

  // element (x, y, z): entries (2,1) = x, (3,2) = y, (3,1) = z of a lower
  // unitriangular matrix; (x,y,z)(x',y',z') = (x+x', y+y', z+z'+y*x')
  const int nn = static_cast<int>(order);
  auto idx = [q](int x, int y, int z) { return (x * q + y) * q + z; };

  std::vector<FieldElement> fe(q);
  for (int v = 0; v < q; ++v) fe[v] = field.decode(v);

  std::vector<int> add(static_cast<std::size_t>(q) * q), fmul(static_cast<std::size_t>(q) * q);
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v) {
      add[static_cast<std::size_t>(u) * q + v] = field.encode(field.add(fe[u], fe[v]));
      fmul[static_cast<std::size_t>(u) * q + v] = field.encode(field.mul(fe[u], fe[v]));
    }
  auto fadd = [&](int u, int v) { return add[static_cast<std::size_t>(u) * q + v]; };
  auto fmu = [&](int u, int v) { return fmul[static_cast<std::size_t>(u) * q + v]; };

  std::vector<int> mul(static_cast<std::size_t>(nn) * nn);
  for (int x1 = 0; x1 < q; ++x1)
    for (int y1 = 0; y1 < q; ++y1)
      for (int z1 = 0; z1 < q; ++z1)
        for (int x2 = 0; x2 < q; ++x2)
          for (int y2 = 0; y2 < q; ++y2)
            for (int z2 = 0; z2 < q; ++z2) {
              int a = idx(x1, y1, z1), b = idx(x2, y2, z2);
              mul[static_cast<std::size_t>(a) * nn + b] =
                  idx(fadd(x1, x2), fadd(y1, y2), fadd(fadd(z1, z2), fmu(y1, x2)));
            }

  std::vector<std::string> labels(nn);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        std::ostringstream os;
        os << "[" << x << " " << y << " " << z << "]";
        labels[idx(x, y, z)] = os.str();
      }
  std::ostringstream name;
  name << "Heis(" << p << "," << n << ")";
  return FiniteGroup(name.str(), nn, std::move(mul), std::move(labels));
}

}  // namespace cdscope
