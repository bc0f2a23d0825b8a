#pragma once

#include <map>
#include <string>
#include <vector>

#include "classeq/classes.hpp"
#include "classeq/detail/combinations.hpp"
#include "classeq/element_set.hpp"
#include "classeq/error.hpp"
#include "classeq/group.hpp"
#include "classeq/rational.hpp"
#include "classeq/subgroups.hpp"

namespace classeq {

/// A choice of non-identity conjugacy classes, held as indices into the
/// canonical class order of a ClassDecomposition (index 0 is the identity
/// class and is never a member).
struct ClassSubset {
  std::vector<int> indices;  // ascending, all >= 1
};

/// The m invariant plus one failing witness subset for every n below it.
struct MInvariantResult {
  int m = 0;
  int k = 0;
  std::map<int, ClassSubset> counterexamples;  // n -> first failing subset
};

/// {identity} together with the union of the selected classes.
inline ElementSet union_with_identity(const ClassDecomposition& dec,
                                      const ClassSubset& s) {
  const int n = static_cast<int>(dec.class_of.size());
  ElementSet u(n);
  u.insert(kIdentity);
  for (int c : s.indices) {
    for (Element x : dec.classes[static_cast<std::size_t>(c)].members) u.insert(x);
  }
  return u;
}

/// Subgroup test of the identity-extended class union, Lagrange fast-fail
/// first. This is the hot predicate behind m_invariant.
inline bool is_class_union_subgroup(const FiniteGroup& g,
                                    const ClassDecomposition& dec,
                                    const ClassSubset& s) {
  return is_subgroup(g, union_with_identity(dec, s));
}

/// Least n in [1, k-1] such that EVERY choice of n distinct non-identity
/// classes, together with the identity, forms a subgroup. For each smaller n
/// the lexicographically first failing subset is recorded as a witness.
/// Enumeration always terminates at n = k-1, whose unique subset is the whole
/// group.
inline MInvariantResult m_invariant(const FiniteGroup& g,
                                    const ClassDecomposition& dec) {
  if (g.order() < 2) {
    throw DegenerateGroupError(
        "m(G) is undefined for the trivial group (no nontrivial classes)");
  }
  MInvariantResult res;
  res.k = dec.k;

  // Per-class element masks; subset unions are a few word-ORs each.
  std::vector<ElementSet> mask;
  mask.reserve(static_cast<std::size_t>(dec.k));
  for (const auto& cls : dec.classes) {
    ElementSet m(g.order());
    for (Element x : cls.members) m.insert(x);
    mask.push_back(std::move(m));
  }

  const int nontrivial = dec.k - 1;
  for (int n = 1; n <= nontrivial; ++n) {
    bool all_pass = true;
    detail::for_each_combination(nontrivial, n, [&](const std::vector<int>& idx) {
      ElementSet u(g.order());
      u.insert(kIdentity);
      std::vector<int> classes;
      classes.reserve(idx.size());
      for (int i : idx) {
        classes.push_back(i + 1);  // skip the identity class
        u |= mask[static_cast<std::size_t>(i + 1)];
      }
      if (!is_subgroup(g, u)) {
        res.counterexamples.emplace(n, ClassSubset{std::move(classes)});
        all_pass = false;
        return false;  // first failure settles this n
      }
      return true;
    });
    if (all_pass) {
      res.m = n;
      return res;
    }
  }
  throw std::logic_error("no n up to k-1 passed; the full union must be G");
}

inline MInvariantResult m_invariant(const FiniteGroup& g) {
  return m_invariant(g, decompose(g));
}

/// The counting value |H||K|/|H cap K| = (m+1)^2/m predicted for two
/// hypothetical class-union subgroups of an abelian group.
inline Rational hk_predicted_order(int m) {
  return Rational(std::int64_t(m + 1) * (m + 1), m);
}

/// For abelian G, builds H = 1 u C_1..C_m and K = 1 u C_1..C_{m-1} u C_{m+1}
/// in canonical class order. When both pass the subgroup test the exact
/// rational |H||K|/|H cap K| is returned; that situation can never occur for
/// m >= 2, because the value (m+1)^2/m is not an integer. When either side
/// fails the subgroup test, the sentinel 0 is returned: no certificate needed.
inline Rational abelian_hk_certificate(const FiniteGroup& g,
                                       const ClassDecomposition& dec, int m) {
  if (!is_abelian(g)) {
    throw PreconditionError("hk certificate requires an abelian group");
  }
  if (m < 2 || m > dec.k - 2) {
    throw PreconditionError("hk certificate requires 2 <= m <= k-2");
  }
  ClassSubset h_pick, k_pick;
  for (int c = 1; c <= m; ++c) h_pick.indices.push_back(c);
  for (int c = 1; c <= m - 1; ++c) k_pick.indices.push_back(c);
  k_pick.indices.push_back(m + 1);

  const ElementSet h = union_with_identity(dec, h_pick);
  const ElementSet k = union_with_identity(dec, k_pick);
  if (!is_subgroup(g, h) || !is_subgroup(g, k)) return Rational(0);
  return Rational(std::int64_t(h.size()) * k.size(), (h & k).size());
}

inline Rational abelian_hk_certificate(const FiniteGroup& g, int m) {
  return abelian_hk_certificate(g, decompose(g), m);
}

}  // namespace classeq
