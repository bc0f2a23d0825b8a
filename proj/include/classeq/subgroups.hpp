#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classeq/arith.hpp"
#include "classeq/detail/combinations.hpp"
#include "classeq/element_set.hpp"
#include "classeq/error.hpp"
#include "classeq/group.hpp"

namespace classeq {

/// Subset of a parent group that contains the identity and is closed under
/// products and inverses.
struct Subgroup {
  ElementSet members;

  int size() const { return members.size(); }
  std::vector<Element> elements() const { return members.to_vector(); }
  bool contains(Element x) const { return members.contains(x); }
};

namespace detail {

/// Product closure of seed together with the identity. Returns nullopt as
/// soon as the closure grows past `limit` (limit < 0 disables the bound).
inline std::optional<ElementSet> closure_up_to(const FiniteGroup& g,
                                               const std::vector<Element>& seed,
                                               int limit) {
  ElementSet set(g.order());
  std::vector<Element> mem;
  auto add = [&](Element x) {
    if (!set.contains(x)) {
      set.insert(x);
      mem.push_back(x);
    }
  };
  add(kIdentity);
  for (Element x : seed) add(x);
  if (limit >= 0 && static_cast<int>(mem.size()) > limit) return std::nullopt;

  // Pair every element with everything discovered up to it, in both orders;
  // inverses arrive as powers, so product closure alone suffices.
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.product(mem[i], mem[j]));
      add(g.product(mem[j], mem[i]));
      if (limit >= 0 && static_cast<int>(mem.size()) > limit) return std::nullopt;
    }
  }
  return set;
}

}  // namespace detail

/// Least subgroup containing the seed.
inline Subgroup generated_subgroup(const FiniteGroup& g,
                                   const std::vector<Element>& seed) {
  return Subgroup{*detail::closure_up_to(g, seed, -1)};
}

/// True iff the subset contains the identity and is product-closed
/// (inverse-closure follows by finiteness). Lagrange fast-fail first.
inline bool is_subgroup(const FiniteGroup& g, const ElementSet& subset) {
  if (!subset.contains(kIdentity)) return false;
  const int sz = subset.size();
  if (g.order() % sz != 0) return false;
  const std::vector<Element> mem = subset.to_vector();
  for (Element x : mem) {
    for (Element y : mem) {
      if (!subset.contains(g.product(x, y))) return false;
    }
  }
  return true;
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  return is_subgroup(g, h.members);
}

/// True iff g^-1 * S * g = S for every g.
inline bool is_normal(const FiniteGroup& g, const ElementSet& subset) {
  const std::vector<Element> mem = subset.to_vector();
  for (Element c = 0; c < g.order(); ++c) {
    for (Element x : mem) {
      if (!subset.contains(g.conjugate(x, c))) return false;
    }
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  return is_normal(g, h.members);
}

/// Subgroup generated by all commutators x^-1 y^-1 x y. Normality of the
/// result is re-checked at runtime.
inline Subgroup derived_subgroup(const FiniteGroup& g) {
  ElementSet comm(g.order());
  std::vector<Element> seed;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      const Element c =
          g.product(g.product(g.inverse(x), g.inverse(y)), g.product(x, y));
      if (!comm.contains(c)) {
        comm.insert(c);
        seed.push_back(c);
      }
    }
  }
  Subgroup d = generated_subgroup(g, seed);
  if (!is_normal(g, d)) {
    throw std::logic_error("derived subgroup is not normal");
  }
  return d;
}

inline bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h) {
  const std::vector<Element> mem = h.elements();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      if (g.product(mem[i], mem[j]) != g.product(mem[j], mem[i])) return false;
    }
  }
  return true;
}

/// A p-subgroup of order the full p-part of |G|, grown greedily: adjoin any
/// p-element whose closure with the current subgroup is still a p-group.
/// Maximal p-subgroups are Sylow, and that theorem is enforced as a runtime
/// check on the final order.
inline Subgroup sylow_subgroup(const FiniteGroup& g, int p) {
  if (!is_prime(p)) {
    throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  }
  const std::int64_t target = p_part(g.order(), p);
  Subgroup h{ElementSet(g.order())};
  h.members.insert(kIdentity);
  if (target == 1) return h;

  while (h.size() < target) {
    bool grew = false;
    for (Element x = 1; x < g.order() && !grew; ++x) {
      if (h.contains(x) || !is_power_of(element_order(g, x), p)) continue;
      std::vector<Element> seed = h.elements();
      seed.push_back(x);
      auto bigger = detail::closure_up_to(g, seed, static_cast<int>(target));
      if (bigger && is_power_of(bigger->size(), p)) {
        h.members = *bigger;
        grew = true;
      }
    }
    if (!grew) {
      throw std::logic_error("maximal p-subgroup smaller than the p-part");
    }
  }
  return h;
}

/// True iff H is abelian and every non-identity member has order p.
inline bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h, int p) {
  if (!subgroup_is_abelian(g, h)) return false;
  for (Element x : h.elements()) {
    if (x != kIdentity && element_order(g, x) != p) return false;
  }
  return true;
}

/// True iff |H| is a power of p (p^0 counts).
inline bool is_p_group(const Subgroup& h, int p) {
  return is_power_of(h.size(), p);
}

struct SplitReport {
  Subgroup normal;
  std::optional<Subgroup> complement;
  bool splits = false;
};

/// Searches for a complement of the normal subgroup N: an H with
/// |H| = |G|/|N| and H meeting N only in the identity. Candidate generating
/// subsets of size <= ceil(log2(|G|/|N|)) are drawn from the elements outside
/// N; every subgroup of order m has a generating set of size <= log2(m), so
/// the search is exhaustive. First hit in canonical element order wins.
inline SplitReport find_complement(const FiniteGroup& g, const Subgroup& normal) {
  if (!is_normal(g, normal)) {
    throw NotNormalError("subgroup is not normal in its parent");
  }
  SplitReport report;
  report.normal = normal;

  const int target = g.order() / normal.size();
  auto accept = [&](Subgroup h) {
    // SplitReport invariant, re-validated before returning.
    if (h.size() * normal.size() != g.order()) {
      throw std::logic_error("complement size mismatch");
    }
    if ((h.members & normal.members).size() != 1) {
      throw std::logic_error("complement meets the normal subgroup");
    }
    ElementSet product_set(g.order());
    for (Element a : normal.elements()) {
      for (Element b : h.elements()) product_set.insert(g.product(a, b));
    }
    if (product_set.size() != g.order()) {
      throw std::logic_error("product set does not cover the group");
    }
    report.complement = std::move(h);
    report.splits = true;
  };

  if (target == 1) {
    Subgroup triv{ElementSet(g.order())};
    triv.members.insert(kIdentity);
    accept(std::move(triv));
    return report;
  }
  if (normal.size() == 1) {
    // The only candidate of full order is G itself.
    ElementSet all(g.order());
    for (Element x = 0; x < g.order(); ++x) all.insert(x);
    accept(Subgroup{std::move(all)});
    return report;
  }

  std::vector<Element> pool;
  for (Element x = 0; x < g.order(); ++x) {
    if (!normal.contains(x)) pool.push_back(x);
  }
  const int max_gens = ceil_log2(target);
  for (int r = 1; r <= max_gens && !report.splits; ++r) {
    detail::for_each_combination(
        static_cast<int>(pool.size()), r, [&](const std::vector<int>& idx) {
          std::vector<Element> seed;
          seed.reserve(idx.size());
          for (int i : idx) seed.push_back(pool[static_cast<std::size_t>(i)]);
          auto closed = detail::closure_up_to(g, seed, target);
          if (closed && closed->size() == target &&
              (*closed & normal.members).size() == 1) {
            accept(Subgroup{std::move(*closed)});
            return false;
          }
          return true;
        });
  }
  return report;
}

}  // namespace classeq
