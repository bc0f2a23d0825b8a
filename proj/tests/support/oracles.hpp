#pragma once

// Independent oracles used by the test suites. Everything here deliberately
// avoids the library's own algorithms and data structures (bitsets, the
// Rational type, pruned enumerations) so that a bug in the implementation
// cannot hide inside its own checker. Expected values frozen in the tests
// were produced by these routines.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "classeq/group.hpp"

namespace oracle {

using classeq::Element;
using classeq::FiniteGroup;

// ---------------------------------------------------------------------------
// Unit-fraction solutions of 1 = sum 1/m_i, brute force. Denominators are
// chosen in nondecreasing order, scanning every candidate from the previous
// denominator upward and skipping the infeasible ones; the only pruning is
// the necessary condition that j copies of 1/m must still be able to reach
// the remaining target (m * p <= j * q).
// ---------------------------------------------------------------------------

struct Frac {
  long long num = 0;
  long long den = 1;
};

inline long long frac_gcd(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Frac frac_sub_unit(Frac r, long long m) {
  // r - 1/m
  Frac out;
  out.num = r.num * m - r.den;
  out.den = r.den * m;
  long long g = frac_gcd(out.num < 0 ? -out.num : out.num, out.den);
  if (g > 1) {
    out.num /= g;
    out.den /= g;
  }
  return out;
}

inline void unit_fraction_search(Frac rem, int terms_left, long long min_den,
                                 std::vector<long long>& acc,
                                 std::set<std::vector<long long>>& out) {
  if (rem.num <= 0) return;
  if (terms_left == 1) {
    // A one-term remainder works iff it is itself a unit fraction: the
    // stored value is reduced, so that means numerator 1.
    if (rem.num == 1 && rem.den >= min_den) {
      acc.push_back(rem.den);
      std::vector<long long> desc(acc.rbegin(), acc.rend());
      out.insert(desc);
      acc.pop_back();
    }
    return;
  }
  for (long long m = min_den; m * rem.num <= terms_left * rem.den; ++m) {
    // skip denominators whose fraction overshoots the remainder
    if (rem.den > rem.num * m) continue;  // 1/m > rem
    acc.push_back(m);
    unit_fraction_search(frac_sub_unit(rem, m), terms_left - 1, m, acc, out);
    acc.pop_back();
  }
}

/// All k-term solutions as descending tuples.
inline std::set<std::vector<long long>> unit_fraction_solutions(int k) {
  std::set<std::vector<long long>> out;
  std::vector<long long> acc;
  unit_fraction_search(Frac{1, 1}, k, 1, acc, out);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup and conjugacy-class oracles over std::set.
// ---------------------------------------------------------------------------

/// Subgroup test by closure equality: close the subset under products and
/// compare with the original. No Lagrange shortcut, no bitsets.
inline bool is_subgroup(const FiniteGroup& g, const std::set<Element>& subset) {
  if (subset.find(classeq::kIdentity) == subset.end()) return false;
  std::set<Element> closure = subset;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> snapshot(closure.begin(), closure.end());
    for (Element a : snapshot) {
      for (Element b : snapshot) {
        if (closure.insert(g.product(a, b)).second) grew = true;
      }
    }
  }
  return closure == subset;
}

/// Conjugacy classes as sorted member sets, via plain orbit collection.
inline std::vector<std::set<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::set<Element>> classes;
  std::set<Element> assigned;
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned.count(x)) continue;
    std::set<Element> orbit;
    for (Element c = 0; c < g.order(); ++c) {
      orbit.insert(g.product(g.product(g.inverse(c), x), c));
    }
    assigned.insert(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

/// Multiset of class sizes, ascending.
inline std::vector<int> class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes;
  for (const auto& cls : conjugacy_classes(g)) {
    sizes.push_back(static_cast<int>(cls.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ---------------------------------------------------------------------------
// The m invariant, recomputed from scratch: subsets of nontrivial classes are
// enumerated by bitmask (no lexicographic machinery shared with the library),
// and each union is checked with the closure-equality subgroup oracle above.
// Every subset of each size is visited; there is no early exit.
// ---------------------------------------------------------------------------

inline int m_invariant(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<std::set<Element>> nontrivial;
  for (const auto& cls : classes) {
    if (!(cls.size() == 1 && cls.count(classeq::kIdentity))) {
      nontrivial.push_back(cls);
    }
  }
  const int t = static_cast<int>(nontrivial.size());
  for (int n = 1; n <= t; ++n) {
    bool all_pass = true;
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
      if (std::popcount(mask) != n) continue;
      std::set<Element> u{classeq::kIdentity};
      for (int b = 0; b < t; ++b) {
        if (mask & (1u << b)) {
          u.insert(nontrivial[static_cast<std::size_t>(b)].begin(),
                   nontrivial[static_cast<std::size_t>(b)].end());
        }
      }
      if (!is_subgroup(g, u)) {
        all_pass = false;
        break;
      }
    }
    if (all_pass) return n;
  }
  return -1;  // unreachable for |G| >= 2
}

inline int element_order(const FiniteGroup& g, Element x) {
  int t = 1;
  Element cur = x;
  while (cur != classeq::kIdentity) {
    cur = g.product(cur, x);
    ++t;
  }
  return t;
}

}  // namespace oracle
