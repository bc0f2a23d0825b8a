#pragma once

#include <vector>

namespace classeq::detail {

/// Visits every size-r subset of {0, ..., n-1} in lexicographic order.
/// `fn` receives the index vector and returns false to stop early.
/// Returns false iff the visit was stopped.
template <class Fn>
bool for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(const_cast<const std::vector<int>&>(idx))) return false;
    // advance to the next combination
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace classeq::detail
