#pragma once

// Robinson-Schensted correspondence by row insertion, and its inverse by
// reverse bumping.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ulam/permutation.hpp"
#include "ulam/tableau.hpp"

namespace ulam {

struct TableauPair {
  Tableau insertion;  // P
  Tableau recording;  // Q

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

inline TableauPair rsk(const Permutation& p) {
  if (p.empty()) throw std::domain_error("rsk of empty permutation");
  Tableau::Rows P, Q;
  for (int i = 1; i <= p.size(); ++i) {
    int x = p(i);
    std::size_t r = 0;
    while (true) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({i});
        break;
      }
      auto& row = P[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        Q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {Tableau(std::move(P)), Tableau(std::move(Q))};
}

inline Permutation rsk_inverse(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) {
    throw std::domain_error("rsk_inverse: tableaux have different shapes");
  }
  const int n = P.size();
  if (n == 0) throw std::domain_error("rsk_inverse of empty tableaux");
  Tableau::Rows prow = P.rows();
  // Locate every recording entry once; entry t always sits at an outer corner
  // when t is the largest remaining.
  std::vector<int> row_of(n + 1);
  for (int r = 0; r < Q.row_count(); ++r) {
    for (int v : Q.row(r)) row_of[v] = r;
  }
  std::vector<int> word(n);
  for (int t = n; t >= 1; --t) {
    int r = row_of[t];
    int x = prow[r].back();
    prow[r].pop_back();
    if (prow[r].empty()) prow.pop_back();
    for (int up = r - 1; up >= 0; --up) {
      auto& row = prow[up];
      // Largest entry smaller than x is bumped up and replaced by x.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    word[t - 1] = x;
  }
  return Permutation(std::move(word));
}

inline TableauPair swapped(const TableauPair& pq) { return {pq.recording, pq.insertion}; }

}  // namespace ulam
