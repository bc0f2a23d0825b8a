#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "classeq/classes.hpp"
#include "classeq/error.hpp"
#include "classeq/group.hpp"
#include "classeq/rational.hpp"

namespace classeq {

/// Default cap on the term count k. k = 7 already has hundreds of thousands
/// of solutions; the cap keeps runtime bounded by construction.
inline constexpr int kDefaultLandauTermCap = 7;

/// One solution of 1 = 1/m_1 + ... + 1/m_k with m_1 >= m_2 >= ... >= m_k.
struct UnitFractionSolution {
  std::vector<std::int64_t> denominators;  // weakly descending

  friend bool operator==(const UnitFractionSolution&,
                         const UnitFractionSolution&) = default;
};

namespace detail {

inline void verify_solution(const UnitFractionSolution& s) {
  Rational sum(0);
  std::int64_t prev = INT64_MAX;
  for (std::int64_t m : s.denominators) {
    if (m < 1 || m > prev) {
      throw std::logic_error("unit-fraction solution is not weakly descending");
    }
    prev = m;
    sum = sum + Rational(1, m);
  }
  if (sum != Rational(1)) {
    throw std::logic_error("unit-fraction solution does not sum to 1");
  }
}

// Denominators are chosen smallest-first (largest fraction first). With j
// terms still open and remaining target r = p/q, the next denominator m obeys
// ceil(1/r) <= m <= floor(j/r): the single fraction cannot overshoot r, and j
// copies of it must be able to reach r.
inline void enumerate_unit_fractions(const Rational& rem, int terms_left,
                                     std::int64_t min_den,
                                     std::vector<std::int64_t>& acc,
                                     std::vector<UnitFractionSolution>& out) {
  if (rem.numerator() <= 0) return;
  const std::int64_t p = rem.numerator();
  const std::int64_t q = rem.denominator();
  if (terms_left == 1) {
    // rem is reduced, so 1/m = p/q forces p = 1 and m = q.
    if (p == 1 && q >= min_den) {
      UnitFractionSolution s;
      s.denominators.assign(acc.rbegin(), acc.rend());
      s.denominators.insert(s.denominators.begin(), q);
      verify_solution(s);
      out.push_back(std::move(s));
    }
    return;
  }
  const std::int64_t lo = std::max(min_den, (q + p - 1) / p);
  const std::int64_t hi = (terms_left * q) / p;
  for (std::int64_t m = lo; m <= hi; ++m) {
    acc.push_back(m);
    enumerate_unit_fractions(rem - Rational(1, m), terms_left - 1, m, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

/// Complete, duplicate-free list of the k-term solutions, sorted
/// lexicographically descending. Every solution is re-verified on emission.
inline std::vector<UnitFractionSolution> landau_solutions(
    int k, int term_cap = kDefaultLandauTermCap) {
  if (k < 1) throw BadParameterError("term count must be >= 1");
  if (k > term_cap) {
    throw CapExceededError("term count " + std::to_string(k) +
                           " exceeds cap of " + std::to_string(term_cap));
  }
  std::vector<UnitFractionSolution> out;
  std::vector<std::int64_t> acc;
  detail::enumerate_unit_fractions(Rational(1), k, 1, acc, out);
  std::sort(out.begin(), out.end(),
            [](const UnitFractionSolution& a, const UnitFractionSolution& b) {
              return a.denominators > b.denominators;
            });
  return out;
}

/// Largest m_1 over the k-term solutions. Since m_1 = |G|/|C_1| with C_1 the
/// identity class, this bounds the order of any group with k classes.
inline std::int64_t max_order_bound(int k, int term_cap = kDefaultLandauTermCap) {
  std::int64_t best = 0;
  for (const auto& s : landau_solutions(k, term_cap)) {
    best = std::max(best, s.denominators.front());
  }
  return best;
}

/// Closed form for the same bound via the doubly-exponential recurrence
/// a_1 = 2, a_{i+1} = a_i^2 - a_i + 1; the k-term maximum of m_1 is a_k - 1.
/// Usable far past the enumeration cap. Once the true value leaves 64 bits
/// the result saturates with exact=false, in which case `value` is still a
/// valid lower bound.
struct OrderBound {
  std::uint64_t value = 0;
  bool exact = true;
};

inline OrderBound sylvester_order_bound(int k) {
  if (k < 1) throw BadParameterError("term count must be >= 1");
  unsigned __int128 a = 2;
  for (int i = 1; i < k; ++i) {
    a = a * a - a + 1;
    if (a > (unsigned __int128)UINT64_MAX) {
      return OrderBound{UINT64_MAX, false};
    }
  }
  return OrderBound{static_cast<std::uint64_t>(a - 1), true};
}

/// Builds the solution realized by G's class equation (denominators
/// m_i = |G|/|C_i|, descending) and asserts that it appears in the
/// enumeration for k(G) terms. Absence would contradict the class equation,
/// so it is reported as an internal error, never a legitimate outcome.
inline UnitFractionSolution matches_landau(const FiniteGroup& g,
                                           int term_cap = kDefaultLandauTermCap) {
  const ClassEquation eq = class_equation(g);
  const int k = static_cast<int>(eq.indices.size());
  if (k > term_cap) {
    throw CapExceededError("group has " + std::to_string(k) +
                           " classes, beyond the enumeration cap of " +
                           std::to_string(term_cap));
  }
  UnitFractionSolution mine;
  mine.denominators = eq.indices;
  std::sort(mine.denominators.begin(), mine.denominators.end(), std::greater<>());

  const auto all = landau_solutions(k, term_cap);
  if (std::find(all.begin(), all.end(), mine) == all.end()) {
    throw std::logic_error("class equation missing from the solution list");
  }
  return mine;
}

}  // namespace classeq
