#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "classeq/element_set.hpp"
#include "classeq/error.hpp"

namespace classeq {

/// Guardrail on the number of elements any construction is allowed to
/// produce. Overridable per call; the CLI also honors CLASSEQ_CLOSURE_CAP.
inline constexpr int kDefaultClosureCap = 10000;

/// A permutation of [0, d), stored as its image list.
using Permutation = std::vector<int>;

struct PermutationGenerators {
  int degree = 0;
  std::vector<Permutation> generators;
};

/// Finite group as an explicit order-n multiplication table, with the
/// identity canonicalized to index 0. Immutable once built, so instances are
/// safe to share read-only across threads.
class FiniteGroup {
 public:
  int order() const { return n_; }

  Element product(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(b)];
  }
  Element inverse(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Element conjugate(Element x, Element g) const {
    return product(product(inverse(g), x), g);
  }

  const std::vector<Element>& table() const { return table_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  FiniteGroup(int n, std::vector<Element> table, std::vector<Element> inverse,
              std::string name)
      : n_(n),
        table_(std::move(table)),
        inverse_(std::move(inverse)),
        name_(std::move(name)) {}

  friend FiniteGroup from_cayley_table(const std::vector<std::vector<int>>&,
                                       std::string);
  friend FiniteGroup from_permutations(const PermutationGenerators&,
                                       std::string, int);
  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&, int);

  int n_ = 0;
  std::vector<Element> table_;    // row-major n*n
  std::vector<Element> inverse_;  // length n
  std::string name_;
};

namespace detail {

inline Permutation compose(const Permutation& a, const Permutation& b) {
  // (a * b)(i) = a(b(i))
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] = a[static_cast<std::size_t>(b[i])];
  }
  return r;
}

inline void check_permutation(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) {
    throw BadParameterError("generator has wrong degree");
  }
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)]) {
      throw BadParameterError("generator is not a permutation of [0, degree)");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace detail

/// Builds and validates a group from a raw table (table[i][j] = i*j). If the
/// identity is not element 0, elements are relabeled so it is. Associativity
/// is checked exhaustively: raw tables are the one input we do not trust.
inline FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& raw,
                                     std::string name = "") {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw NotAGroupError("empty table");
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != n) {
      throw NotAGroupError("table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw NotAGroupError("table entry out of range [0, n)");
      }
    }
  }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      ok = raw[static_cast<std::size_t>(cand)][static_cast<std::size_t>(j)] == j &&
           raw[static_cast<std::size_t>(j)][static_cast<std::size_t>(cand)] == j;
    }
    if (ok) e = cand;
  }
  if (e < 0) throw NotAGroupError("no identity element");

  // Relabel with the transposition (0 e) so the identity lands on index 0.
  auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] =
          relabel(raw[static_cast<std::size_t>(relabel(i))]
                     [static_cast<std::size_t>(relabel(j))]);
    }
  }
  auto at = [&](int i, int j) {
    return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
  };

  std::vector<Element> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) == 0 && at(j, i) == 0) {
        inverse[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(i)] < 0) {
      throw NotAGroupError("element " + std::to_string(i) +
                           " has no two-sided inverse");
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (at(at(i, j), l) != at(i, at(j, l))) {
          throw NotAGroupError("associativity fails at (" + std::to_string(i) +
                               ", " + std::to_string(j) + ", " +
                               std::to_string(l) + ")");
        }
      }
    }
  }

  return FiniteGroup(n, std::move(table), std::move(inverse), std::move(name));
}

/// Breadth-first product closure of the generated permutation group.
/// Elements are indexed in discovery order (identity first, hence already
/// canonical); the resulting table is a group table by construction, so no
/// associativity pass is run.
inline FiniteGroup from_permutations(const PermutationGenerators& gens,
                                     std::string name = "",
                                     int closure_cap = kDefaultClosureCap) {
  if (gens.degree < 1) throw BadParameterError("permutation degree must be >= 1");
  for (const auto& g : gens.generators) detail::check_permutation(g, gens.degree);

  const int ngen = static_cast<int>(gens.generators.size());
  std::vector<Permutation> elems;
  std::map<Permutation, int> index;
  Permutation id(static_cast<std::size_t>(gens.degree));
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  index.emplace(std::move(id), 0);

  // succ[i][g] = index of elems[i] * gen_g; parent[j] = (i, g) with
  // elems[j] = elems[i] * gen_g, used to fill whole table rows without
  // further permutation lookups.
  std::vector<std::vector<int>> succ;
  std::vector<std::pair<int, int>> parent{{-1, -1}};

  for (std::size_t i = 0; i < elems.size(); ++i) {
    succ.emplace_back(static_cast<std::size_t>(ngen), -1);
    for (int g = 0; g < ngen; ++g) {
      Permutation p = detail::compose(elems[i], gens.generators[static_cast<std::size_t>(g)]);
      auto it = index.find(p);
      if (it == index.end()) {
        if (static_cast<int>(elems.size()) >= closure_cap) {
          throw ClosureCapExceededError(
              "permutation closure exceeded cap of " + std::to_string(closure_cap));
        }
        int fresh = static_cast<int>(elems.size());
        elems.push_back(p);
        parent.emplace_back(static_cast<int>(i), g);
        it = index.emplace(std::move(p), fresh).first;
      }
      succ[i][static_cast<std::size_t>(g)] = it->second;
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Element* row = table.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
    row[0] = i;
    for (int j = 1; j < n; ++j) {
      auto [pj, gj] = parent[static_cast<std::size_t>(j)];
      row[j] = succ[static_cast<std::size_t>(row[pj])][static_cast<std::size_t>(gj)];
    }
  }

  std::vector<Element> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Element* row = table.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
    for (int j = 0; j < n; ++j) {
      if (row[j] == 0) {
        inverse[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
  }

  return FiniteGroup(n, std::move(table), std::move(inverse), std::move(name));
}

/// Group of order |G|*|H| on pairs, componentwise product; pair (i, j) is
/// serialized as i*|H| + j, so (0, 0) stays the identity.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  int closure_cap = kDefaultClosureCap) {
  const std::int64_t n64 = std::int64_t{1} * a.order() * b.order();
  if (n64 > closure_cap) {
    throw ClosureCapExceededError("direct product order " + std::to_string(n64) +
                                  " exceeds cap of " + std::to_string(closure_cap));
  }
  const int n = static_cast<int>(n64);
  const int nb = b.order();
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<Element> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int ia = i / nb, ib = i % nb;
    inverse[static_cast<std::size_t>(i)] = a.inverse(ia) * nb + b.inverse(ib);
    for (int j = 0; j < n; ++j) {
      const int ja = j / nb, jb = j % nb;
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] =
          a.product(ia, ja) * nb + b.product(ib, jb);
    }
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return FiniteGroup(n, std::move(table), std::move(inverse), std::move(name));
}

/// Least t >= 1 with x^t = identity.
inline int element_order(const FiniteGroup& g, Element x) {
  int t = 1;
  Element cur = x;
  while (cur != kIdentity) {
    cur = g.product(cur, x);
    ++t;
  }
  return t;
}

/// x^e for e >= 0.
inline Element element_power(const FiniteGroup& g, Element x, std::int64_t e) {
  Element r = kIdentity;
  for (std::int64_t i = 0; i < e; ++i) r = g.product(r, x);
  return r;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (g.product(i, j) != g.product(j, i)) return false;
    }
  }
  return true;
}

/// Exhaustive re-check of all four group-table invariants (closure range,
/// identity, inverses, associativity). Used by tests and property suites.
inline void validate_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Element v = g.product(i, j);
      if (v < 0 || v >= n) throw NotAGroupError("closure violated");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (g.product(kIdentity, j) != j || g.product(j, kIdentity) != j) {
      throw NotAGroupError("identity violated at " + std::to_string(j));
    }
  }
  for (int i = 0; i < n; ++i) {
    Element v = g.inverse(i);
    if (v < 0 || v >= n || g.product(i, v) != kIdentity ||
        g.product(v, i) != kIdentity) {
      throw NotAGroupError("inverse violated at " + std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Element ij = g.product(i, j);
      for (int l = 0; l < n; ++l) {
        if (g.product(ij, l) != g.product(i, g.product(j, l))) {
          throw NotAGroupError("associativity violated at (" + std::to_string(i) +
                               ", " + std::to_string(j) + ", " + std::to_string(l) +
                               ")");
        }
      }
    }
  }
}

}  // namespace classeq
