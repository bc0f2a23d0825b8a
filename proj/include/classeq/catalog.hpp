#pragma once

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "classeq/cayley_io.hpp"
#include "classeq/error.hpp"
#include "classeq/group.hpp"

namespace classeq {

/// Cyclic group of order n, as the closure of one n-cycle.
inline FiniteGroup cyclic_group(int n, int closure_cap = kDefaultClosureCap) {
  if (n < 1) throw BadParameterError("cyclic group needs n >= 1");
  if (n > closure_cap) {
    throw ClosureCapExceededError("order " + std::to_string(n) + " exceeds cap");
  }
  PermutationGenerators gens;
  gens.degree = n;
  Permutation cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  gens.generators.push_back(std::move(cycle));
  return from_permutations(gens, "C" + std::to_string(n), closure_cap);
}

/// (C2)^r, generated by r disjoint transpositions.
inline FiniteGroup elementary_abelian_2_group_of_rank(
    int r, int closure_cap = kDefaultClosureCap) {
  if (r < 1) throw BadParameterError("elementary abelian rank must be >= 1");
  if (r > 30 || (std::int64_t{1} << r) > closure_cap) {
    throw ClosureCapExceededError("order 2^" + std::to_string(r) + " exceeds cap");
  }
  PermutationGenerators gens;
  gens.degree = 2 * r;
  for (int i = 0; i < r; ++i) {
    Permutation p(static_cast<std::size_t>(2 * r));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[static_cast<std::size_t>(2 * i)], p[static_cast<std::size_t>(2 * i + 1)]);
    gens.generators.push_back(std::move(p));
  }
  return from_permutations(gens, "E2^" + std::to_string(r), closure_cap);
}

/// Symmetries of the n-gon (order 2n), n >= 3: rotation i -> i+1 and the
/// reflection i -> -i.
inline FiniteGroup dihedral_group(int n, int closure_cap = kDefaultClosureCap) {
  if (n < 3) throw BadParameterError("dihedral group needs n >= 3");
  PermutationGenerators gens;
  gens.degree = n;
  Permutation rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  gens.generators.push_back(std::move(rot));
  gens.generators.push_back(std::move(refl));
  return from_permutations(gens, "D" + std::to_string(n), closure_cap);
}

inline FiniteGroup symmetric_group(int n, int closure_cap = kDefaultClosureCap) {
  if (n < 1) throw BadParameterError("symmetric group needs n >= 1");
  PermutationGenerators gens;
  gens.degree = n;
  if (n >= 2) {
    Permutation cycle(static_cast<std::size_t>(n)), swap01(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
      swap01[static_cast<std::size_t>(i)] = i;
    }
    std::swap(swap01[0], swap01[1]);
    gens.generators.push_back(std::move(swap01));
    gens.generators.push_back(std::move(cycle));
  }
  return from_permutations(gens, "S" + std::to_string(n), closure_cap);
}

/// Even permutations of n points, n >= 3, generated by (0 1 2) and the
/// longest even cycle.
inline FiniteGroup alternating_group(int n, int closure_cap = kDefaultClosureCap) {
  if (n < 3) throw BadParameterError("alternating group needs n >= 3");
  PermutationGenerators gens;
  gens.degree = n;
  Permutation three(static_cast<std::size_t>(n));
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  gens.generators.push_back(std::move(three));
  Permutation cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  } else {
    // n-cycles are odd for even n; rotate the points 1..n-1 instead.
    for (int i = 1; i < n; ++i) {
      cycle[static_cast<std::size_t>(i)] = i == n - 1 ? 1 : i + 1;
    }
  }
  gens.generators.push_back(std::move(cycle));
  return from_permutations(gens, "A" + std::to_string(n), closure_cap);
}

/// The quaternion group of order 8 from its multiplication rules on
/// {+-1, +-i, +-j, +-k}; element index = 2*axis + (1 if negative).
inline FiniteGroup quaternion_group() {
  // axis products: row * col for axes 1, i, j, k
  static constexpr int axis[4][4] = {{0, 1, 2, 3},
                                     {1, 0, 3, 2},
                                     {2, 3, 0, 1},
                                     {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {{0, 0, 0, 0},
                                    {0, 1, 0, 1},
                                    {0, 1, 1, 0},
                                    {0, 0, 1, 1}};
  std::vector<std::vector<int>> raw(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, bx = b / 2;
      const int sign = (a & 1) ^ (b & 1) ^ neg[ax][bx];
      raw[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          2 * axis[ax][bx] + sign;
    }
  }
  return from_cayley_table(raw, "Q8");
}

/// Parsed form of a group specifier string: C12, E2^3, D4, S4, A5, Q8,
/// products like C2xC3, or file:path.cay.
struct GroupSpecifier {
  enum class Kind {
    cyclic,
    elementary_abelian_2,
    dihedral,
    symmetric,
    alternating,
    quaternion8,
    product,
    file,
  };

  Kind kind = Kind::cyclic;
  int param = 0;
  std::vector<GroupSpecifier> factors;  // product only
  std::string path;                     // file only

  static GroupSpecifier parse(const std::string& text);
  std::string str() const;
};

namespace detail {

inline GroupSpecifier parse_atom(const std::string& s) {
  auto numeric_tail = [&](std::size_t from, int min_value) {
    if (from >= s.size()) throw BadParameterError("bad group specifier: " + s);
    int value = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9' || value > 1000000) {
        throw BadParameterError("bad group specifier: " + s);
      }
      value = value * 10 + (s[i] - '0');
    }
    if (value < min_value) {
      throw BadParameterError("parameter out of range in specifier: " + s);
    }
    return value;
  };

  GroupSpecifier spec;
  if (s == "Q8") {
    spec.kind = GroupSpecifier::Kind::quaternion8;
    return spec;
  }
  if (s.rfind("E2^", 0) == 0) {
    spec.kind = GroupSpecifier::Kind::elementary_abelian_2;
    spec.param = numeric_tail(3, 1);
    return spec;
  }
  if (!s.empty()) {
    switch (s[0]) {
      case 'C':
        spec.kind = GroupSpecifier::Kind::cyclic;
        spec.param = numeric_tail(1, 1);
        return spec;
      case 'D':
        spec.kind = GroupSpecifier::Kind::dihedral;
        spec.param = numeric_tail(1, 3);
        return spec;
      case 'S':
        spec.kind = GroupSpecifier::Kind::symmetric;
        spec.param = numeric_tail(1, 1);
        return spec;
      case 'A':
        spec.kind = GroupSpecifier::Kind::alternating;
        spec.param = numeric_tail(1, 3);
        return spec;
      default:
        break;
    }
  }
  throw BadParameterError("bad group specifier: " + s);
}

}  // namespace detail

inline GroupSpecifier GroupSpecifier::parse(const std::string& text) {
  if (text.rfind("file:", 0) == 0) {
    GroupSpecifier spec;
    spec.kind = Kind::file;
    spec.path = text.substr(5);
    if (spec.path.empty()) throw BadParameterError("empty path in specifier");
    return spec;
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return detail::parse_atom(parts[0]);
  GroupSpecifier spec;
  spec.kind = Kind::product;
  for (const auto& p : parts) spec.factors.push_back(detail::parse_atom(p));
  return spec;
}

inline std::string GroupSpecifier::str() const {
  switch (kind) {
    case Kind::cyclic: return "C" + std::to_string(param);
    case Kind::elementary_abelian_2: return "E2^" + std::to_string(param);
    case Kind::dihedral: return "D" + std::to_string(param);
    case Kind::symmetric: return "S" + std::to_string(param);
    case Kind::alternating: return "A" + std::to_string(param);
    case Kind::quaternion8: return "Q8";
    case Kind::product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += 'x';
        s += factors[i].str();
      }
      return s;
    }
    case Kind::file: return "file:" + path;
  }
  return "?";
}

/// Realizes a specifier as a group; the group is named after the specifier.
inline FiniteGroup build(const GroupSpecifier& spec,
                         int closure_cap = kDefaultClosureCap) {
  switch (spec.kind) {
    case GroupSpecifier::Kind::cyclic:
      return cyclic_group(spec.param, closure_cap);
    case GroupSpecifier::Kind::elementary_abelian_2:
      return elementary_abelian_2_group_of_rank(spec.param, closure_cap);
    case GroupSpecifier::Kind::dihedral:
      return dihedral_group(spec.param, closure_cap);
    case GroupSpecifier::Kind::symmetric:
      return symmetric_group(spec.param, closure_cap);
    case GroupSpecifier::Kind::alternating:
      return alternating_group(spec.param, closure_cap);
    case GroupSpecifier::Kind::quaternion8:
      return quaternion_group();
    case GroupSpecifier::Kind::product: {
      FiniteGroup g = build(spec.factors.front(), closure_cap);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        g = direct_product(g, build(spec.factors[i], closure_cap), closure_cap);
      }
      return g;
    }
    case GroupSpecifier::Kind::file:
      return read_cayley_file(spec.path);
  }
  throw BadParameterError("unreachable specifier kind");
}

inline FiniteGroup build(const std::string& spec,
                         int closure_cap = kDefaultClosureCap) {
  return build(GroupSpecifier::parse(spec), closure_cap);
}

/// Deterministic verification catalog: cyclic C1..C12, elementary abelian
/// ranks 1..4, dihedral D3..D8, S3, S4, A4, A5, Q8 and two mixed products.
/// 29 groups, orders up to 60.
inline std::vector<std::pair<std::string, FiniteGroup>> default_catalog(
    int closure_cap = kDefaultClosureCap) {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (int r = 1; r <= 4; ++r) names.push_back("E2^" + std::to_string(r));
  for (int n = 3; n <= 8; ++n) names.push_back("D" + std::to_string(n));
  names.insert(names.end(), {"S3", "S4", "A4", "A5", "Q8", "C2xC3", "C3xC3"});

  std::vector<std::pair<std::string, FiniteGroup>> catalog;
  catalog.reserve(names.size());
  for (const auto& name : names) {
    catalog.emplace_back(name, build(name, closure_cap));
  }
  return catalog;
}

/// CLASSEQ_CLOSURE_CAP overrides the closure cap for the CLI.
inline int closure_cap_from_env() {
  if (const char* env = std::getenv("CLASSEQ_CLOSURE_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 1000000) return static_cast<int>(v);
    throw BadParameterError("CLASSEQ_CLOSURE_CAP out of range: " + std::string(env));
  }
  return kDefaultClosureCap;
}

}  // namespace classeq
