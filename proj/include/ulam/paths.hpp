#pragma once

// East/North lattice paths from the origin that never rise above y = x, their
// bijection with tableaux of at most two rows, and the flip injection
// L(n,k) x L(n,k+2) -> L(n,k+1) x L(n,k+1).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ulam/tableau.hpp"

namespace ulam {

class LatticePath {
 public:
  LatticePath() = default;

  // Steps over {'E','N'}.
  explicit LatticePath(std::string steps) : steps_(std::move(steps)) {
    if (!is_valid(steps_)) {
      throw std::invalid_argument("'" + steps_ + "' is not a sub-diagonal E/N path");
    }
  }

  static bool is_valid(std::string_view steps) {
    int east = 0, north = 0;
    for (char c : steps) {
      if (c == 'E') {
        ++east;
      } else if (c == 'N') {
        if (++north > east) return false;
      } else {
        return false;
      }
    }
    return true;
  }

  const std::string& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  int east() const {
    int e = 0;
    for (char c : steps_) e += c == 'E';
    return e;
  }
  int north() const { return size() - east(); }

  // Member of L(n,k): n steps ending at (k, n-k).
  bool in_class(int n, int k) const { return size() == n && east() == k; }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::string steps_;
};

inline const std::string& to_string(const LatticePath& p) { return p.steps(); }

inline LatticePath tableau_to_path(const Tableau& t) {
  if (t.row_count() > 2) throw std::domain_error("tableau_to_path: more than two rows");
  std::string steps(t.size(), 'N');
  if (!t.empty()) {
    for (int v : t.row(0)) steps[v - 1] = 'E';
  }
  return LatticePath(std::move(steps));
}

inline Tableau path_to_tableau(const LatticePath& path) {
  std::vector<int> first, second;
  for (int i = 0; i < path.size(); ++i) {
    (path.steps()[i] == 'E' ? first : second).push_back(i + 1);
  }
  Tableau::Rows rows;
  if (!first.empty()) rows.push_back(std::move(first));
  if (!second.empty()) rows.push_back(std::move(second));
  return Tableau(std::move(rows));
}

// Every member of L(n,k), in lexicographic order of step strings (E < N).
inline std::vector<LatticePath> paths(int n, int k) {
  std::vector<LatticePath> out;
  if (n < 0 || k < 0 || k > n || n - k > k) return out;
  std::string steps;
  auto rec = [&](auto&& self, int east, int north) -> void {
    if (east + north == n) {
      out.emplace_back(steps);
      return;
    }
    if (east < k) {
      steps.push_back('E');
      self(self, east + 1, north);
      steps.pop_back();
    }
    if (north < n - k && north < east) {
      steps.push_back('N');
      self(self, east, north + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace detail {

// Last step index t < n at which `shifted` (started at (1,-1)) and `other`
// (started at (0,0)) stand on the same lattice point. Both walks reach x + y =
// t after t steps, so they coincide exactly when their x coordinates do.
inline std::optional<int> last_meeting(std::string_view shifted, std::string_view other) {
  std::optional<int> last;
  int xs = 1, xo = 0;
  for (std::size_t t = 0; t < shifted.size(); ++t) {
    if (xs == xo) last = static_cast<int>(t);
    xs += shifted[t] == 'E';
    xo += other[t] == 'E';
  }
  return last;
}

}  // namespace detail

struct PathPair {
  LatticePath first;
  LatticePath second;

  friend bool operator==(const PathPair&, const PathPair&) = default;
  friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

// Translates P by (1,-1) to P', cuts P' and Q at their last common point X,
// and exchanges the tails: ((P'_1 Q_2) moved back to the origin, Q_1 P'_2).
// Requires P in L(n,k), Q in L(n,k+2) and n-k <= k <= n-2.
inline PathPair flip_inject(const LatticePath& P, const LatticePath& Q) {
  const int n = P.size();
  const int k = P.east();
  if (Q.size() != n || Q.east() != k + 2) {
    throw std::domain_error("flip_inject: expected P in L(n,k) and Q in L(n,k+2)");
  }
  if (n - k > k || k > n - 2) {
    throw std::domain_error("flip_inject: need n-k <= k <= n-2");
  }
  const auto x = detail::last_meeting(P.steps(), Q.steps());
  if (!x) throw std::logic_error("flip_inject: translated paths never meet");
  const std::string& p = P.steps();
  const std::string& q = Q.steps();
  return {LatticePath(p.substr(0, *x) + q.substr(*x)),
          LatticePath(q.substr(0, *x) + p.substr(*x))};
}

// Inverse of flip_inject on its image; nullopt for pairs outside the image.
inline std::optional<PathPair> flip_preimage(const LatticePath& R, const LatticePath& S) {
  if (R.size() != S.size() || R.east() != S.east()) {
    throw std::domain_error("flip_preimage: R and S must lie in the same L(n,k+1)");
  }
  const auto x = detail::last_meeting(R.steps(), S.steps());
  if (!x) return std::nullopt;
  const std::string& r = R.steps();
  const std::string& s = S.steps();
  std::string p = r.substr(0, *x) + s.substr(*x);
  std::string q = s.substr(0, *x) + r.substr(*x);
  if (!LatticePath::is_valid(p) || !LatticePath::is_valid(q)) return std::nullopt;
  PathPair candidate{LatticePath(std::move(p)), LatticePath(std::move(q))};
  const int n = candidate.first.size();
  const int k = candidate.first.east();
  if (candidate.second.east() != k + 2 || n - k > k || k > n - 2) return std::nullopt;
  if (flip_inject(candidate.first, candidate.second) != PathPair{R, S}) return std::nullopt;
  return candidate;
}

}  // namespace ulam

template <>
struct std::hash<ulam::LatticePath> {
  std::size_t operator()(const ulam::LatticePath& p) const noexcept {
    return std::hash<std::string>{}(p.steps());
  }
};
