#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "classeq/arith.hpp"
#include "classeq/element_set.hpp"
#include "classeq/group.hpp"
#include "classeq/rational.hpp"

namespace classeq {

struct ConjugacyClass {
  std::vector<Element> members;  // sorted ascending
  Element representative = kIdentity;  // least member
  int member_order = 1;  // shared element order of every member

  int size() const { return static_cast<int>(members.size()); }
};

/// Partition of the group into conjugacy classes, in the canonical order
/// (size ascending, then representative element order, then representative
/// index). The identity class is always first.
struct ClassDecomposition {
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;  // element index -> class index
  int k = 0;                  // number of classes
};

/// Orbits of the conjugation action, canonically ordered.
inline ClassDecomposition decompose(const FiniteGroup& g) {
  const int n = g.order();
  ClassDecomposition dec;
  dec.class_of.assign(static_cast<std::size_t>(n), -1);

  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (Element x = 0; x < n; ++x) {
    if (visited[static_cast<std::size_t>(x)]) continue;
    ElementSet seen(n);
    std::vector<Element> members;
    for (Element conj = 0; conj < n; ++conj) {
      const Element y = g.conjugate(x, conj);
      if (!seen.contains(y)) {
        seen.insert(y);
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    for (Element y : members) visited[static_cast<std::size_t>(y)] = true;
    ConjugacyClass cls;
    cls.representative = members.front();
    cls.member_order = element_order(g, cls.representative);
    cls.members = std::move(members);
    dec.classes.push_back(std::move(cls));
  }

  std::sort(dec.classes.begin(), dec.classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              if (a.member_order != b.member_order) {
                return a.member_order < b.member_order;
              }
              return a.representative < b.representative;
            });

  dec.k = static_cast<int>(dec.classes.size());
  for (int c = 0; c < dec.k; ++c) {
    for (Element y : dec.classes[static_cast<std::size_t>(c)].members) {
      dec.class_of[static_cast<std::size_t>(y)] = c;
    }
  }
  return dec;
}

/// {g : gx = xg}; its size times the class size of x equals |G|.
inline std::vector<Element> centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element c = 0; c < g.order(); ++c) {
    if (g.product(c, x) == g.product(x, c)) out.push_back(c);
  }
  return out;
}

/// Class sizes (descending) together with the exact indices m_i = |G|/|C_i|.
/// The unit-fraction identity sum(1/m_i) = 1 is re-verified before returning;
/// a failure there is a broken invariant, never a legitimate outcome.
struct ClassEquation {
  std::vector<int> sizes;            // descending
  std::vector<std::int64_t> indices; // m_i = |G| / sizes[i], aligned with sizes
};

inline ClassEquation class_equation(const FiniteGroup& g,
                                    const ClassDecomposition& dec) {
  ClassEquation eq;
  eq.sizes.reserve(static_cast<std::size_t>(dec.k));
  for (const auto& cls : dec.classes) eq.sizes.push_back(cls.size());
  std::sort(eq.sizes.begin(), eq.sizes.end(), std::greater<>());
  eq.indices.reserve(eq.sizes.size());
  Rational sum(0);
  for (int s : eq.sizes) {
    if (g.order() % s != 0) {
      throw std::logic_error("class size does not divide the group order");
    }
    const std::int64_t m = g.order() / s;
    eq.indices.push_back(m);
    sum = sum + Rational(1, m);
  }
  if (sum != Rational(1)) {
    throw std::logic_error("class equation identity sum(1/m_i) = 1 violated");
  }
  return eq;
}

inline ClassEquation class_equation(const FiniteGroup& g) {
  return class_equation(g, decompose(g));
}

/// True iff every x is conjugate to x^m for every m in [1, |x|) coprime
/// to |x|.
inline bool is_rational(const FiniteGroup& g, const ClassDecomposition& dec) {
  for (Element x = 0; x < g.order(); ++x) {
    const int ord = element_order(g, x);
    Element pw = x;
    for (int m = 1; m < ord; ++m) {
      // pw = x^m maintained incrementally
      if (gcd64(m, ord) == 1 &&
          dec.class_of[static_cast<std::size_t>(pw)] !=
              dec.class_of[static_cast<std::size_t>(x)]) {
        return false;
      }
      pw = g.product(pw, x);
    }
  }
  return true;
}

inline bool is_rational(const FiniteGroup& g) { return is_rational(g, decompose(g)); }

/// True iff every x != 1 is conjugate to each of its non-trivial powers.
inline bool conjugate_to_all_nontrivial_powers(const FiniteGroup& g,
                                               const ClassDecomposition& dec) {
  for (Element x = 1; x < g.order(); ++x) {
    const int ord = element_order(g, x);
    Element pw = x;
    for (int j = 1; j < ord; ++j) {
      if (dec.class_of[static_cast<std::size_t>(pw)] !=
          dec.class_of[static_cast<std::size_t>(x)]) {
        return false;
      }
      pw = g.product(pw, x);
    }
  }
  return true;
}

inline bool conjugate_to_all_nontrivial_powers(const FiniteGroup& g) {
  return conjugate_to_all_nontrivial_powers(g, decompose(g));
}

/// True iff every non-identity element has prime order.
inline bool all_elements_prime_order(const FiniteGroup& g) {
  for (Element x = 1; x < g.order(); ++x) {
    if (!is_prime(element_order(g, x))) return false;
  }
  return true;
}

/// Abelian with every non-identity element of order 2.
inline bool is_elementary_abelian_2_group(const FiniteGroup& g) {
  if (!is_abelian(g)) return false;
  for (Element x = 1; x < g.order(); ++x) {
    if (element_order(g, x) != 2) return false;
  }
  return true;
}

}  // namespace classeq
