#pragma once

// Exhaustive generators. Permutation and involution visitors receive the raw
// one-line word to keep the inner loops allocation free; wrap it in a
// Permutation when a value is needed.

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "ulam/tableau.hpp"

namespace ulam {

// Permutations of length n whose first entry is `first`, in lexicographic
// order. The union over first = 1..n is S_n, which is how sweeps partition
// their work.
template <typename Visitor>
void for_each_permutation_with_first(int n, int first, Visitor&& visit) {
  std::vector<int> w;
  w.reserve(n);
  w.push_back(first);
  for (int v = 1; v <= n; ++v) {
    if (v != first) w.push_back(v);
  }
  do {
    visit(std::span<const int>(w));
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  for (int first = 1; first <= n; ++first) for_each_permutation_with_first(n, first, visit);
}

// Involutions of length n: the smallest unmatched point is either fixed or
// paired with a larger unmatched point.
template <typename Visitor>
void for_each_involution(int n, Visitor&& visit) {
  std::vector<int> w(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    while (i < n && w[i] != 0) ++i;
    if (i == n) {
      visit(std::span<const int>(w));
      return;
    }
    w[i] = i + 1;
    self(self, i + 1);
    w[i] = 0;
    for (int j = i + 1; j < n; ++j) {
      if (w[j] != 0) continue;
      w[i] = j + 1;
      w[j] = i + 1;
      self(self, i + 1);
      w[i] = 0;
      w[j] = 0;
    }
  };
  rec(rec, 0);
}

// Standard Young tableaux of a fixed shape: entries 1..n are placed in turn
// into any cell that keeps the filled region a Ferrers diagram.
template <typename Visitor>
void for_each_tableau_of_shape(const Shape& shape, Visitor&& visit) {
  const int n = shape.size();
  const int rows = shape.row_count();
  Tableau::Rows fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].reserve(shape.row(r));
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      visit(Tableau(fill));
      return;
    }
    for (int r = 0; r < rows; ++r) {
      const int len = static_cast<int>(fill[r].size());
      if (len < shape.row(r) && (r == 0 || static_cast<int>(fill[r - 1].size()) > len)) {
        fill[r].push_back(v);
        self(self, v + 1);
        fill[r].pop_back();
      }
    }
  };
  if (n > 0) rec(rec, 1);
}

template <typename Visitor>
void for_each_tableau(int n, Visitor&& visit) {
  for (const Shape& s : partitions(n)) for_each_tableau_of_shape(s, visit);
}

template <typename Visitor>
void for_each_tableau(int n, int first_row, Visitor&& visit) {
  for (const Shape& s : partitions(n)) {
    if (s.row(0) == first_row) for_each_tableau_of_shape(s, visit);
  }
}

}  // namespace ulam
