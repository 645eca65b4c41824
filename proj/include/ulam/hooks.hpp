#pragma once

// Hook-shaped tableaux: one row plus one column. A hook of size n is fixed by
// the entries of its first row; the rest of its entries form the column.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulam/count.hpp"
#include "ulam/tableau.hpp"

namespace ulam {

// Where the largest entry sits.
enum class HookType {
  down,   // ends the first column
  right,  // ends the first row
};

inline const char* to_string(HookType t) { return t == HookType::down ? "down" : "right"; }

inline bool is_hook(const Tableau& t) {
  for (int r = 1; r < t.row_count(); ++r) {
    if (t.row(r).size() != 1) return false;
  }
  return true;
}

inline HookType hook_type(const Tableau& t) {
  if (!is_hook(t)) throw std::domain_error("hook_type of a non-hook tableau");
  const int n = t.size();
  if (n < 2) throw std::domain_error("hook_type needs a hook of size >= 2");
  return t.row(0).back() == n ? HookType::right : HookType::down;
}

// The column entries below the corner, top to bottom.
inline std::vector<int> hook_leg(const Tableau& t) {
  std::vector<int> leg;
  for (int r = 1; r < t.row_count(); ++r) leg.push_back(t.row(r).front());
  return leg;
}

// Builds the hook with the given arm (first row, corner included) and leg.
inline Tableau make_hook(std::vector<int> arm, const std::vector<int>& leg) {
  Tableau::Rows rows;
  rows.push_back(std::move(arm));
  for (int v : leg) rows.push_back({v});
  return Tableau(std::move(rows));
}

inline Tableau hook_from_first_row(int n, const std::vector<int>& first_row) {
  std::vector<int> leg;
  for (int v = 1, i = 0; v <= n; ++v) {
    if (i < static_cast<int>(first_row.size()) && first_row[i] == v) {
      ++i;
    } else {
      leg.push_back(v);
    }
  }
  return make_hook(first_row, leg);
}

// Hooks of size n with first row length k, ordered lexicographically by
// first-row entry set; rank is the position in this order.
inline Count hook_class_size(int n, int k) { return binomial(n - 1, k - 1); }

inline Count hook_rank(const Tableau& t) {
  if (!is_hook(t)) throw std::domain_error("hook_rank of a non-hook tableau");
  const int n = t.size();
  const int k = t.first_row_length();
  // Choose k-1 values out of {2..n}; shift to {1..N} with N = n-1.
  const int N = n - 1;
  const int choose = k - 1;
  Count rank = 0;
  int prev = 0;
  for (int i = 0; i < choose; ++i) {
    const int v = t.row(0)[i + 1] - 1;
    for (int skipped = prev + 1; skipped < v; ++skipped) {
      rank += binomial(N - skipped, choose - i - 1);
    }
    prev = v;
  }
  return rank;
}

inline Tableau hook_unrank(int n, int k, Count rank) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("hook_unrank: bad class");
  if (rank >= hook_class_size(n, k)) throw std::domain_error("hook_unrank: rank out of range");
  const int N = n - 1;
  const int choose = k - 1;
  std::vector<int> row{1};
  int v = 1;
  for (int i = 0; i < choose; ++i) {
    while (true) {
      const Count block = binomial(N - v, choose - i - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    row.push_back(v + 1);
    ++v;
  }
  return hook_from_first_row(n, row);
}

// Every hook of size n with first row length k, in rank order.
inline std::vector<Tableau> hooks(int n, int k) {
  std::vector<Tableau> out;
  if (n < 1 || k < 1 || k > n) return out;
  std::vector<int> row{1};
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(row.size()) == k) {
      out.push_back(hook_from_first_row(n, row));
      return;
    }
    const int need = k - static_cast<int>(row.size());
    for (int v = next; v + need - 1 <= n; ++v) {
      row.push_back(v);
      self(self, v + 1);
      row.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace ulam
