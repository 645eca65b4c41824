#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> all_words(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool increasing_on(const Word& w, std::uint32_t mask) {
  int last = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (w[i] <= last) return false;
    last = w[i];
  }
  return true;
}

// Longest increasing subsequence over every subset of positions.
inline int lis(const Word& w) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    if (increasing_on(w, mask)) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline int lds(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return lis(r);
}

// Distance from the identity to every permutation of length n, by BFS where a
// move takes one entry out and puts it back at another position.
inline std::map<Word, int> move_distances(int n) {
  Word id(n);
  std::iota(id.begin(), id.end(), 1);
  std::map<Word, int> dist{{id, 0}};
  std::queue<Word> todo;
  todo.push(id);
  while (!todo.empty()) {
    const Word w = todo.front();
    todo.pop();
    const int d = dist[w];
    for (int from = 0; from < n; ++from) {
      Word rest = w;
      const int v = rest[from];
      rest.erase(rest.begin() + from);
      for (int to = 0; to < n; ++to) {
        Word next = rest;
        next.insert(next.begin() + to, v);
        if (dist.emplace(next, d + 1).second) todo.push(next);
      }
    }
  }
  return dist;
}

// Shortest move sequence from p to q, by BFS from p.
inline int move_distance(const Word& p, const Word& q) {
  std::map<Word, int> dist{{p, 0}};
  std::queue<Word> todo;
  todo.push(p);
  const int n = static_cast<int>(p.size());
  while (!todo.empty()) {
    const Word w = todo.front();
    todo.pop();
    if (w == q) return dist[w];
    for (int from = 0; from < n; ++from) {
      Word rest = w;
      const int v = rest[from];
      rest.erase(rest.begin() + from);
      for (int to = 0; to < n; ++to) {
        Word next = rest;
        next.insert(next.begin() + to, v);
        if (dist.emplace(next, dist[w] + 1).second) todo.push(next);
      }
    }
  }
  return -1;
}

inline bool contains(const Word& w, const Word& pat) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pat.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Word sub;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) sub.push_back(w[i]);
    }
    bool iso = true;
    for (int i = 0; i < k && iso; ++i) {
      for (int j = 0; j < k && iso; ++j) iso = (sub[i] < sub[j]) == (pat[i] < pat[j]);
    }
    if (iso) return true;
  }
  return false;
}

// Row insertion by hand, returning P's rows.
inline std::vector<Word> insertion_tableau(const Word& w) {
  std::vector<Word> rows;
  for (int x : w) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return rows;
}

// Number of SYT of a shape by the hook-length formula.
inline std::uint64_t hook_length_count(const std::vector<int>& rows) {
  int n = std::accumulate(rows.begin(), rows.end(), 0);
  std::vector<int> hooks;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++below;
      hooks.push_back(rows[i] - j - 1 + below + 1);
    }
  }
  // Multiply numerator and divide greedily to stay exact.
  std::vector<int> num(n);
  std::iota(num.begin(), num.end(), 1);
  for (int h : hooks) {
    int left = h;
    for (int& f : num) {
      const int g = std::gcd(f, left);
      f /= g;
      left /= g;
      if (left == 1) break;
    }
  }
  std::uint64_t out = 1;
  for (int f : num) out *= static_cast<std::uint64_t>(f);
  return out;
}

// Surplus found by peeling one cell at a time from the ends of the first row
// and first column while the diagram stays a Ferrers shape.
struct Peeled {
  std::vector<Word> area;
  Word eastern;
  Word southern;
};

inline Peeled peel(std::vector<Word> rows) {
  Peeled out;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t j = rows[0].size() - 1;
    if (j > 0 && (rows.size() < 2 || rows[1].size() <= j)) {
      out.eastern.push_back(rows[0].back());
      rows[0].pop_back();
      changed = true;
    }
    if (rows.size() > 1 && rows.back().size() == 1) {
      out.southern.push_back(rows.back().front());
      rows.pop_back();
      changed = true;
    }
  }
  std::sort(out.eastern.begin(), out.eastern.end());
  std::sort(out.southern.begin(), out.southern.end());
  out.area = std::move(rows);
  return out;
}

using Point = std::pair<int, int>;

inline std::vector<Point> walk(const std::string& steps, Point start) {
  std::vector<Point> pts{start};
  for (char c : steps) {
    Point p = pts.back();
    (c == 'E' ? p.first : p.second) += 1;
    pts.push_back(p);
  }
  return pts;
}

// Flip by explicit point sets: X is the last point of P shifted by (1,-1)
// that also lies on Q, excluding the shared endpoint case.
inline std::optional<std::pair<std::string, std::string>> flip(const std::string& p, const std::string& q) {
  const auto ps = walk(p, {1, -1});
  const auto qs = walk(q, {0, 0});
  const std::set<Point> on_q(qs.begin(), qs.end() - 1);
  std::optional<std::size_t> x;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    if (on_q.contains(ps[i])) x = i;
  }
  if (!x) return std::nullopt;
  // A point at distance i from the start of P' is also step i of Q.
  return std::pair{p.substr(0, *x) + q.substr(*x), q.substr(0, *x) + p.substr(*x)};
}

inline bool ballot(const std::string& steps) {
  int e = 0, n = 0;
  for (char c : steps) {
    (c == 'E' ? e : n) += 1;
    if (n > e) return false;
  }
  return true;
}

inline std::uint64_t count_ballot_paths(int n, int k) {
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::string s;
    for (int i = 0; i < n; ++i) s += (mask >> i & 1u) ? 'E' : 'N';
    total += ballot(s);
  }
  return total;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
