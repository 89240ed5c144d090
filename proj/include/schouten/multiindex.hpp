#pragma once

// Sorted multi-index bookkeeping for fully symmetric tensors.
//
// A symmetric order-k tensor is stored on sorted index tuples only. Stored
// component values do NOT absorb the permutation multiplicity: the component
// at (0,0,1) is the tensor entry X^{001} itself, and any sum over all index
// tuples (contractions, pairings) multiplies by multiplicity() explicitly.

#include <algorithm>
#include <vector>

#include "schouten/scalar.hpp"

namespace schouten {

using MultiIndex = std::vector<int>;  // sorted ascending, entries in [0, dim)

inline bool is_sorted_index(const MultiIndex& idx) {
  return std::is_sorted(idx.begin(), idx.end());
}

inline MultiIndex sorted(MultiIndex idx) {
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Number of distinct orderings of the multiset: k! / prod(counts!).
inline long long multiplicity(const MultiIndex& idx) {
  long long result = 1;
  long long run = 1;
  long long pos = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    ++pos;
    result = result * pos;
    if (i > 0 && idx[i] == idx[i - 1]) {
      ++run;
    } else {
      run = 1;
    }
    result /= run;
  }
  return result;
}

/// All sorted multi-indices of the given order over axes [0, dim).
inline std::vector<MultiIndex> multisets(int dim, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(order, 0);
  if (order == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = order - 1;
    while (i >= 0 && cur[i] == dim - 1) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int j = i; j < order; ++j) cur[j] = v;
  }
  return out;
}

/// Distinct orderings of a sorted multi-index.
inline std::vector<MultiIndex> arrangements(MultiIndex idx) {
  std::vector<MultiIndex> out;
  if (idx.empty()) {
    out.push_back({});
    return out;
  }
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

inline MultiIndex sorted_merge(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline MultiIndex sorted_with(const MultiIndex& a, int extra) {
  MultiIndex out = a;
  out.insert(std::upper_bound(out.begin(), out.end(), extra), extra);
  return out;
}

/// Per-axis counts of a tuple, e.g. (0,0,1) over dim 2 -> [2,1].
inline std::vector<int> degree_vector(const MultiIndex& idx, int dim) {
  std::vector<int> deg(dim, 0);
  for (int i : idx) ++deg[i];
  return deg;
}

inline MultiIndex index_from_degrees(const std::vector<int>& deg) {
  MultiIndex idx;
  for (int axis = 0; axis < static_cast<int>(deg.size()); ++axis)
    for (int c = 0; c < deg[axis]; ++c) idx.push_back(axis);
  return idx;
}

}  // namespace schouten
