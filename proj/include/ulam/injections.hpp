#pragma once

// The constructive injections: the recursive hook injection
// H(n,k) x H(n,l) -> H(n,k+1) x H(n,l-1), the protected-tableau injection
// built on it, the two-row injection induced by the path flip, and the lift
// of a tableau-pair injection to permutation pairs through RSK.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulam/count.hpp"
#include "ulam/hooks.hpp"
#include "ulam/paths.hpp"
#include "ulam/permutation.hpp"
#include "ulam/protected.hpp"
#include "ulam/rsk.hpp"
#include "ulam/tableau.hpp"

namespace ulam {

// (i, j) -> (t div D, t mod D) with t = i*B + j; injective from [A]x[B] into
// [C]x[D] whenever A*B <= C*D.
class RankInjection {
 public:
  RankInjection(Count a, Count b, Count c, Count d) : a_(a), b_(b), c_(c), d_(d) {
    if (static_cast<WideCount>(a) * b > static_cast<WideCount>(c) * d) {
      throw std::domain_error("RankInjection: domain larger than codomain");
    }
  }

  std::pair<Count, Count> operator()(Count i, Count j) const {
    if (i >= a_ || j >= b_) throw std::domain_error("RankInjection: index out of range");
    const WideCount t = static_cast<WideCount>(i) * b_ + j;
    return {static_cast<Count>(t / d_), static_cast<Count>(t % d_)};
  }

 private:
  Count a_, b_, c_, d_;
};

namespace detail {

struct HookBaseEntry {
  int n, k, l;
  const char* in1;
  const char* in2;
  const char* out1;
  const char* out2;
};

// The induction anchor for n = 3 and n = 4, every admissible (k, l).
inline constexpr std::array<HookBaseEntry, 8> kHookBaseTable{{
    {3, 1, 3, "1/2/3", "1,2,3", "1,2/3", "1,3/2"},
    {4, 1, 3, "1/2/3/4", "1,2,3/4", "1,2/3/4", "1,3/2/4"},
    {4, 1, 3, "1/2/3/4", "1,2,4/3", "1,2/3/4", "1,4/2/3"},
    {4, 1, 3, "1/2/3/4", "1,3,4/2", "1,3/2/4", "1,4/2/3"},
    {4, 1, 4, "1/2/3/4", "1,2,3,4", "1,2/3/4", "1,2,4/3"},
    {4, 2, 4, "1,2/3/4", "1,2,3,4", "1,2,3/4", "1,2,4/3"},
    {4, 2, 4, "1,4/2/3", "1,2,3,4", "1,2,4/3", "1,3,4/2"},
    {4, 2, 4, "1,3/2/4", "1,2,3,4", "1,2,3/4", "1,3,4/2"},
}};

}  // namespace detail

struct HookBaseMapping {
  int n, k, l;
  Tableau in1, in2, out1, out2;
};

inline const std::vector<HookBaseMapping>& hook_base_table() {
  static const std::vector<HookBaseMapping> table = [] {
    std::vector<HookBaseMapping> t;
    for (const auto& e : detail::kHookBaseTable) {
      t.push_back({e.n, e.k, e.l, parse_tableau(e.in1), parse_tableau(e.in2),
                   parse_tableau(e.out1), parse_tableau(e.out2)});
    }
    return t;
  }();
  return table;
}

namespace detail {

inline Tableau remove_largest(const Tableau& t) {
  const int n = t.size();
  Tableau::Rows rows = t.rows();
  if (rows.front().back() == n && rows.front().size() > 1) {
    rows.front().pop_back();
  } else {
    rows.pop_back();
  }
  return Tableau(std::move(rows));
}

inline Tableau append_to_row(const Tableau& t, int v) {
  Tableau::Rows rows = t.rows();
  rows.front().push_back(v);
  return Tableau(std::move(rows));
}

inline Tableau append_to_column(const Tableau& t, int v) {
  Tableau::Rows rows = t.rows();
  rows.push_back({v});
  return Tableau(std::move(rows));
}

inline Tableau place_largest(const Tableau& t, HookType where) {
  const int v = t.size() + 1;
  return where == HookType::right ? append_to_row(t, v) : append_to_column(t, v);
}

}  // namespace detail

// phi_{n,k,l}: H(n,k) x H(n,l) -> H(n,k+1) x H(n,l-1) for 1 <= k <= l-2 <= n-2.
//
// n = 3, 4 use the base table. For l = k+2 the pair type (position of n in
// each hook) is preserved: a (down, right) pair moves n across in both hooks
// and swaps them; any other pair drops n, recurses on size n-1, and puts n
// back where it was. Gaps l > k+2 use a rank injection between the
// lexicographically ordered classes.
inline std::pair<Tableau, Tableau> hook_inject(int n, int k, int l, const Tableau& t1,
                                               const Tableau& t2) {
  if (n < 3 || k < 1 || k > l - 2 || l > n) {
    throw std::domain_error("hook_inject: need n >= 3 and 1 <= k <= l-2 <= n-2");
  }
  if (!is_hook(t1) || !is_hook(t2)) throw std::domain_error("hook_inject: inputs must be hooks");
  if (t1.size() != n || t2.size() != n) throw std::domain_error("hook_inject: size mismatch");
  if (t1.first_row_length() != k || t2.first_row_length() != l) {
    throw std::domain_error("hook_inject: first-row length mismatch");
  }

  if (n <= 4) {
    for (const auto& e : hook_base_table()) {
      if (e.n == n && e.k == k && e.l == l && e.in1 == t1 && e.in2 == t2) {
        return {e.out1, e.out2};
      }
    }
    throw std::logic_error("hook_inject: base table has no entry for " + to_string(t1) +
                           " ; " + to_string(t2));
  }

  if (l > k + 2) {
    const RankInjection rank(hook_class_size(n, k), hook_class_size(n, l),
                             hook_class_size(n, k + 1), hook_class_size(n, l - 1));
    const auto [i, j] = rank(hook_rank(t1), hook_rank(t2));
    return {hook_unrank(n, k + 1, i), hook_unrank(n, l - 1, j)};
  }

  const HookType type1 = hook_type(t1);
  const HookType type2 = hook_type(t2);
  if (type1 == HookType::down && type2 == HookType::right) {
    const Tableau u1 = detail::append_to_row(detail::remove_largest(t1), n);
    const Tableau u2 = detail::append_to_column(detail::remove_largest(t2), n);
    return {u2, u1};
  }

  const Tableau s1 = detail::remove_largest(t1);
  const Tableau s2 = detail::remove_largest(t2);
  auto [v1, v2] = hook_inject(n - 1, s1.first_row_length(), s2.first_row_length(), s1, s2);
  return {detail::place_largest(v1, type1), detail::place_largest(v2, type2)};
}

// psi: P(l,m)(n,k-1) x P(l,m)(n,k+1) -> P(l,m)(n,k) x P(l,m)(n,k).
//
// The surpluses of each input are gathered into a hook around a new corner 1,
// renumbered to 1..n-m+1, sent through phi_{n-m+1,k-l,k-l+2}, renumbered back
// with the same surplus values, and reattached to the untouched protected
// areas.
inline std::pair<Tableau, Tableau> protected_inject(int n, int k, int l, int m,
                                                    const Tableau& t1, const Tableau& t2) {
  if (t1.size() != n || t2.size() != n) throw std::domain_error("protected_inject: size mismatch");
  if (t1.first_row_length() != k - 1 || t2.first_row_length() != k + 1) {
    throw std::domain_error("protected_inject: first rows must have lengths k-1 and k+1");
  }
  if (!is_lm_protected(t1, l, m) || !is_lm_protected(t2, l, m)) {
    throw std::domain_error("protected_inject: inputs are not (" + std::to_string(l) + "," +
                            std::to_string(m) + ")-protected");
  }
  const auto d1 = protected_decompose(t1);
  const auto d2 = protected_decompose(t2);

  auto sorted_surplus = [](const ProtectedDecomposition& d) {
    std::vector<int> s = d.eastern_surplus;
    s.insert(s.end(), d.southern_surplus.begin(), d.southern_surplus.end());
    std::sort(s.begin(), s.end());
    return s;
  };
  auto rank_in = [](const std::vector<int>& sorted, int v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 2;
  };
  auto to_hook = [&](const ProtectedDecomposition& d, const std::vector<int>& sorted) {
    std::vector<int> arm{1};
    for (int v : d.eastern_surplus) arm.push_back(rank_in(sorted, v));
    std::vector<int> leg;
    for (int v : d.southern_surplus) leg.push_back(rank_in(sorted, v));
    return make_hook(std::move(arm), leg);
  };
  auto from_hook = [](const Tableau& hook, const std::vector<int>& sorted,
                      const ProtectedDecomposition& d) {
    std::vector<int> eastern;
    for (std::size_t j = 1; j < hook.row(0).size(); ++j) eastern.push_back(sorted[hook.row(0)[j] - 2]);
    std::vector<int> southern;
    for (int v : hook_leg(hook)) southern.push_back(sorted[v - 2]);
    return reattach(d.area, eastern, southern);
  };

  const auto s1 = sorted_surplus(d1);
  const auto s2 = sorted_surplus(d2);
  const int h = n - m + 1;
  const auto [j1, j2] = hook_inject(h, k - l, k - l + 2, to_hook(d1, s1), to_hook(d2, s2));
  return {from_hook(j1, s1, d1), from_hook(j2, s2, d2)};
}

// Tableau form of the path flip on tableaux with at most two rows.
inline std::pair<Tableau, Tableau> two_row_inject(const Tableau& t1, const Tableau& t2) {
  const auto r = flip_inject(tableau_to_path(t1), tableau_to_path(t2));
  return {path_to_tableau(r.first), path_to_tableau(r.second)};
}

// Raised when an injection sends a pair of tableaux to tableaux of different
// shapes, so no permutation corresponds to the image.
class ShapeRigidityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// F(p1, p2) = (w1, w2) where RSK(w1) = inj(P1, P2) and RSK(w2) = inj(Q1, Q2).
// Both tableaux of each image must share a shape for w1, w2 to exist; this
// holds for classes whose shape is fixed by size and first-row length.
template <typename TableauInjection>
std::pair<Permutation, Permutation> lift(TableauInjection&& inj, const Permutation& p1,
                                         const Permutation& p2) {
  const TableauPair a = rsk(p1);
  const TableauPair b = rsk(p2);
  const auto [x1, x2] = inj(a.insertion, b.insertion);
  const auto [y1, y2] = inj(a.recording, b.recording);
  if (x1.shape() != x2.shape() || y1.shape() != y2.shape()) {
    throw ShapeRigidityError("lift: image tableaux have different shapes (" +
                             to_string(x1.shape()) + " vs " + to_string(x2.shape()) + ", " +
                             to_string(y1.shape()) + " vs " + to_string(y2.shape()) + ")");
  }
  return {rsk_inverse(x1, x2), rsk_inverse(y1, y2)};
}

}  // namespace ulam
