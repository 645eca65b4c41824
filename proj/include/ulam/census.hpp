#pragma once

// Exhaustive censuses of the permutation and tableau classes, counted by
// longest increasing subsequence (or first-row length), with closed forms and
// the log-concavity check.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "ulam/count.hpp"
#include "ulam/enumerate.hpp"
#include "ulam/hooks.hpp"
#include "ulam/paths.hpp"
#include "ulam/permutation.hpp"
#include "ulam/protected.hpp"
#include "ulam/rsk.hpp"
#include "ulam/tableau.hpp"

namespace ulam {

enum class ClassKind {
  all_permutations,         // u
  involutions,              // i
  hooks,                    // h
  protected_tableaux,       // p, with (l, m)
  two_row_involutions,      // a
  avoid321_permutations,    // b
  hook_pair_permutations,   // m
  skew_merged_involutions,  // sm
  protected24_tableaux,     // p24
};

struct ClassLabel {
  ClassKind kind = ClassKind::all_permutations;
  int l = 0;
  int m = 0;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

inline std::string to_string(const ClassLabel& c) {
  switch (c.kind) {
    case ClassKind::all_permutations: return "u";
    case ClassKind::involutions: return "i";
    case ClassKind::hooks: return "h";
    case ClassKind::protected_tableaux:
      return "p(" + std::to_string(c.l) + "," + std::to_string(c.m) + ")";
    case ClassKind::two_row_involutions: return "a";
    case ClassKind::avoid321_permutations: return "b";
    case ClassKind::hook_pair_permutations: return "m";
    case ClassKind::skew_merged_involutions: return "sm";
    case ClassKind::protected24_tableaux: return "p24";
  }
  return "?";
}

// Accepts the short names above; "p" takes its parameters as "p(l,m)".
inline ClassLabel parse_class_label(std::string_view text) {
  static const std::map<std::string, ClassKind, std::less<>> names{
      {"u", ClassKind::all_permutations},
      {"i", ClassKind::involutions},
      {"h", ClassKind::hooks},
      {"a", ClassKind::two_row_involutions},
      {"b", ClassKind::avoid321_permutations},
      {"m", ClassKind::hook_pair_permutations},
      {"sm", ClassKind::skew_merged_involutions},
      {"p24", ClassKind::protected24_tableaux},
  };
  if (auto it = names.find(text); it != names.end()) return {it->second, 0, 0};
  if (text.starts_with("p(") && text.ends_with(")")) {
    const std::string inner(text.substr(2, text.size() - 3));
    const auto comma = inner.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used_l = 0, used_m = 0;
        const int l = std::stoi(inner.substr(0, comma), &used_l);
        const int m = std::stoi(inner.substr(comma + 1), &used_m);
        if (used_l == comma && used_m == inner.size() - comma - 1 && l >= 1 && m >= l) {
          return {ClassKind::protected_tableaux, l, m};
        }
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown class label '" + std::string(text) + "'");
}

// Range of k on which the class is supported, and on which log-concavity is
// asserted.
inline std::pair<int, int> support(const ClassLabel& c, int n) {
  switch (c.kind) {
    case ClassKind::two_row_involutions:
    case ClassKind::avoid321_permutations:
      return {(n + 1) / 2, n};
    case ClassKind::protected_tableaux:
      return {c.l, c.l + n - c.m};
    case ClassKind::protected24_tableaux:
      return {2, n - 2};
    default:
      return {1, n};
  }
}

// Enumeration cap: the number of candidate objects a census may scan.
struct Budget {
  Count max_scan = factorial(12);

  // ULAM_BUDGET, when set to a positive integer, replaces the default.
  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("ULAM_BUDGET"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) b.max_scan = v;
    }
    return b;
  }
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of candidates the enumeration of this class scans at size n.
inline WideCount scan_size(const ClassLabel& c, int n) {
  auto saturating_factorial = [](int k) {
    WideCount r = 1;
    for (int i = 2; i <= k && r < (WideCount{1} << 100); ++i) r *= i;
    return r;
  };
  auto saturating_involutions = [](int k) {
    WideCount prev = 1, cur = 1;
    for (int i = 2; i <= k && cur < (WideCount{1} << 100); ++i) {
      WideCount next = cur + (i - 1) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  switch (c.kind) {
    case ClassKind::all_permutations:
    case ClassKind::avoid321_permutations:
    case ClassKind::hook_pair_permutations:
      return saturating_factorial(n);
    case ClassKind::hooks:
      return n >= 100 ? (WideCount{1} << 100) : (WideCount{1} << std::max(n - 1, 0));
    default:
      return saturating_involutions(n);
  }
}

inline void require_budget(const ClassLabel& c, int n, const Budget& budget) {
  if (n < 1) throw std::domain_error("class size must be at least 1");
  const WideCount need = scan_size(c, n);
  if (need > budget.max_scan) {
    throw BudgetExceeded("enumerating class " + to_string(c) + " at n=" + std::to_string(n) +
                         " scans " + to_string(need) + " candidates, over the budget of " +
                         std::to_string(budget.max_scan) +
                         "; lower n or raise ULAM_BUDGET (expect roughly 10^7 candidates per "
                         "second per thread)");
  }
}

struct ClassSequence {
  ClassLabel label;
  int n = 0;
  int k_min = 1;
  int k_max = 0;
  std::map<int, Count> counts;  // every k in [k_min, k_max], zeros included

  Count at(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }

  Count total() const {
    Count t = 0;
    for (const auto& [k, c] : counts) t = checked_add(t, c);
    return t;
  }

  friend bool operator==(const ClassSequence&, const ClassSequence&) = default;
};

namespace detail {

inline ClassSequence empty_sequence(const ClassLabel& c, int n) {
  ClassSequence s;
  s.label = c;
  s.n = n;
  std::tie(s.k_min, s.k_max) = support(c, n);
  for (int k = s.k_min; k <= s.k_max; ++k) s.counts[k] = 0;
  return s;
}

inline void add_count(ClassSequence& s, int k, Count c) {
  auto& slot = s.counts[k];
  slot = checked_add(slot, c);
}

// Histogram over S_n of key(word) in [0, n], split by first entry across
// `threads` workers. Partition results are summed, so the answer does not
// depend on the schedule.
template <typename Key>
std::vector<Count> permutation_histogram(int n, int threads, Key key) {
  std::vector<std::vector<Count>> partial(n + 1, std::vector<Count>(n + 2, 0));
  auto work = [&](int first) {
    auto& local = partial[first];
    for_each_permutation_with_first(n, first, [&](std::span<const int> w) {
      const int k = key(w);
      if (k >= 0) ++local[k];
    });
  };
  const int workers = std::clamp(threads, 1, n);
  if (workers == 1) {
    for (int f = 1; f <= n; ++f) work(f);
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int f = next++; f <= n; f = next++) work(f);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Count> hist(n + 2, 0);
  for (int f = 1; f <= n; ++f) {
    for (int k = 0; k <= n + 1; ++k) hist[k] = checked_add(hist[k], partial[f][k]);
  }
  return hist;
}

inline bool word_avoids_321(std::span<const int> w) { return lds_of_word(w) <= 2; }

}  // namespace detail

// (l,m)-protected tableaux of size n with first row k.
template <typename Visitor>
void for_each_protected_tableau(int n, int k, int l, int m, Visitor&& visit) {
  // Entries go in increasing order, so a surplus entry beats both corners
  // exactly when the opposite corner is already filled: eastern cells wait
  // for d, southern cells for c.
  for (const Shape& s : partitions(n)) {
    if (s.row(0) != k || protected_parameters(s) != std::pair{l, m}) continue;
    const int rows = s.row_count();
    const int area_rows = std::max(s.column(1), 1);
    Tableau::Rows fill(rows);
    auto rec = [&](auto&& self, int v) -> void {
      if (v > n) {
        visit(Tableau(fill));
        return;
      }
      for (int r = 0; r < rows; ++r) {
        const int len = static_cast<int>(fill[r].size());
        if (len >= s.row(r) || (r > 0 && static_cast<int>(fill[r - 1].size()) <= len)) continue;
        if (r == 0 && len >= l && fill[area_rows - 1].empty()) continue;
        if (r >= area_rows && static_cast<int>(fill[0].size()) < l) continue;
        fill[r].push_back(v);
        self(self, v + 1);
        fill[r].pop_back();
      }
    };
    if (n > 0) rec(rec, 1);
  }
}

inline std::vector<Tableau> protected_tableaux(int n, int k, int l, int m) {
  std::vector<Tableau> out;
  for_each_protected_tableau(n, k, l, m, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

inline ClassSequence sequence(const ClassLabel& c, int n, const Budget& budget = {},
                              int threads = 1) {
  require_budget(c, n, budget);
  ClassSequence s = detail::empty_sequence(c, n);
  auto from_histogram = [&](const std::vector<Count>& hist) {
    for (int k = 1; k <= n; ++k) {
      if (hist[k] != 0) detail::add_count(s, k, hist[k]);
    }
  };
  switch (c.kind) {
    case ClassKind::all_permutations:
      from_histogram(detail::permutation_histogram(
          n, threads, [](std::span<const int> w) { return detail::lis_of_word(w); }));
      break;
    case ClassKind::avoid321_permutations:
      from_histogram(detail::permutation_histogram(n, threads, [](std::span<const int> w) {
        return detail::word_avoids_321(w) ? detail::lis_of_word(w) : -1;
      }));
      break;
    case ClassKind::hook_pair_permutations:
      from_histogram(detail::permutation_histogram(n, threads, [n](std::span<const int> w) {
        const int k = detail::lis_of_word(w);
        return detail::lds_of_word(w) == n - k + 1 ? k : -1;
      }));
      break;
    case ClassKind::involutions:
    case ClassKind::two_row_involutions:
    case ClassKind::skew_merged_involutions: {
      static constexpr std::array<int, 3> k321{3, 2, 1};
      static constexpr std::array<int, 4> k2143{2, 1, 4, 3};
      static constexpr std::array<int, 4> k3412{3, 4, 1, 2};
      for_each_involution(n, [&](std::span<const int> w) {
        if (c.kind == ClassKind::two_row_involutions &&
            detail::word_contains_pattern(w, k321)) {
          return;
        }
        if (c.kind == ClassKind::skew_merged_involutions &&
            (detail::word_contains_pattern(w, k2143) || detail::word_contains_pattern(w, k3412))) {
          return;
        }
        detail::add_count(s, detail::lis_of_word(w), 1);
      });
      break;
    }
    case ClassKind::hooks:
      for (int k = 1; k <= n; ++k) {
        std::vector<int> rows{k};
        rows.resize(n - k + 1, 1);
        for_each_tableau_of_shape(Shape(rows), [&](const Tableau&) { detail::add_count(s, k, 1); });
      }
      break;
    case ClassKind::protected_tableaux:
    case ClassKind::protected24_tableaux: {
      const int l = c.kind == ClassKind::protected24_tableaux ? 2 : c.l;
      const int m = c.kind == ClassKind::protected24_tableaux ? 4 : c.m;
      for (int k = s.k_min; k <= s.k_max; ++k) {
        for_each_protected_tableau(n, k, l, m, [&](const Tableau&) { detail::add_count(s, k, 1); });
      }
      break;
    }
  }
  return s;
}

using Member = std::variant<Permutation, Tableau>;

inline std::string to_string(const Member& m) {
  return std::visit([](const auto& v) { return to_string(v); }, m);
}

// Streams every member of the class. Permutation classes are visited in
// lexicographic order, tableau classes by shape.
template <typename Visitor>
void for_each_member(const ClassLabel& c, int n, const Budget& budget, Visitor&& visit) {
  require_budget(c, n, budget);
  auto perms = [&](auto keep) {
    for_each_permutation(n, [&](std::span<const int> w) {
      if (keep(w)) visit(Member(Permutation(std::vector<int>(w.begin(), w.end()))));
    });
  };
  auto invols = [&](auto keep) {
    for_each_involution(n, [&](std::span<const int> w) {
      if (keep(w)) visit(Member(Permutation(std::vector<int>(w.begin(), w.end()))));
    });
  };
  switch (c.kind) {
    case ClassKind::all_permutations:
      perms([](auto) { return true; });
      break;
    case ClassKind::avoid321_permutations:
      perms([](auto w) { return detail::word_avoids_321(w); });
      break;
    case ClassKind::hook_pair_permutations:
      perms([n](auto w) { return detail::lds_of_word(w) == n - detail::lis_of_word(w) + 1; });
      break;
    case ClassKind::involutions:
      invols([](auto) { return true; });
      break;
    case ClassKind::two_row_involutions:
      invols([](auto w) { return detail::word_avoids_321(w); });
      break;
    case ClassKind::skew_merged_involutions:
      invols([](auto w) { return is_skew_merged(Permutation(std::vector<int>(w.begin(), w.end()))); });
      break;
    case ClassKind::hooks:
      for (int k = 1; k <= n; ++k) {
        for (auto& t : ulam::hooks(n, k)) visit(Member(std::move(t)));
      }
      break;
    case ClassKind::protected_tableaux:
    case ClassKind::protected24_tableaux: {
      const int l = c.kind == ClassKind::protected24_tableaux ? 2 : c.l;
      const int m = c.kind == ClassKind::protected24_tableaux ? 4 : c.m;
      const auto [lo, hi] = support(c, n);
      for (int k = lo; k <= hi; ++k) {
        for_each_protected_tableau(n, k, l, m, [&](const Tableau& t) { visit(Member(t)); });
      }
      break;
    }
  }
}

inline std::vector<Member> enumerate(const ClassLabel& c, int n, const Budget& budget = {}) {
  std::vector<Member> out;
  for_each_member(c, n, budget, [&](Member m) { out.push_back(std::move(m)); });
  return out;
}

// ---------------------------------------------------------------------------
// Shape-wise counting: RSK puts S_n in bijection with same-shape tableau pairs
// and involutions with single tableaux, so u(n,k) is the sum of f(shape)^2 and
// i(n,k) the sum of f(shape) over shapes with first row k. f is computed by
// the corner-removal recursion.

inline Count tableau_count(const Shape& shape) {
  static thread_local std::map<std::vector<int>, Count> memo;
  if (shape.size() <= 1) return 1;
  if (auto it = memo.find(shape.rows()); it != memo.end()) return it->second;
  Count total = 0;
  const auto& rows = shape.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool corner = r + 1 == rows.size() || rows[r + 1] < rows[r];
    if (!corner) continue;
    std::vector<int> smaller = rows;
    if (--smaller[r] == 0) smaller.pop_back();
    total = checked_add(total, tableau_count(Shape(smaller)));
  }
  memo.emplace(rows, total);
  return total;
}

inline ClassSequence shape_sequence(const ClassLabel& c, int n) {
  if (n < 1) throw std::domain_error("class size must be at least 1");
  if (c.kind != ClassKind::all_permutations && c.kind != ClassKind::involutions) {
    throw std::domain_error("shape-wise counting covers classes u and i only");
  }
  ClassSequence s = detail::empty_sequence(c, n);
  for (const Shape& sh : partitions(n)) {
    const Count f = tableau_count(sh);
    detail::add_count(s, sh.row(0),
                      c.kind == ClassKind::all_permutations ? checked_mul(f, f) : f);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Closed forms.

// Per-k closed forms for h, a, sm and m. Zero for 1 <= k <= n outside the
// class's support; domain error where the formula is undefined.
inline Count closed_form(const ClassLabel& c, int n, int k) {
  if (n < 1) throw std::domain_error("closed_form: n must be at least 1");
  if (k < 0 || k > n) throw std::domain_error("closed_form: k outside 0..n");
  switch (c.kind) {
    case ClassKind::hooks:
    case ClassKind::skew_merged_involutions:
      return k == 0 ? 0 : binomial(n - 1, k - 1);
    case ClassKind::hook_pair_permutations: {
      const Count h = k == 0 ? 0 : binomial(n - 1, k - 1);
      return checked_mul(h, h);
    }
    case ClassKind::two_row_involutions: {
      if (2 * k < n) return 0;
      const WideCount num = static_cast<WideCount>(binomial(n, k)) * (2 * k - n + 1);
      if (num % (k + 1) != 0) throw std::logic_error("closed_form(a): inexact division");
      return static_cast<Count>(num / (k + 1));
    }
    default:
      throw std::domain_error("closed_form: no per-k formula for class " + to_string(c));
  }
}

// (2,4)-protected tableaux of size n: (n-3) 2^(n-3), n >= 4.
inline Count protected24_total(int n) {
  if (n < 4) throw std::domain_error("protected24_total needs n >= 4");
  return checked_mul(static_cast<Count>(n - 3), pow2(n - 3));
}

// Tableaux whose shape is a hook plus the cell (2,2): (n-4) 2^(n-2) + 2, n >= 4.
inline Count near_hook_total(int n) {
  if (n < 4) throw std::domain_error("near_hook_total needs n >= 4");
  return checked_add(checked_mul(static_cast<Count>(n - 4), pow2(n - 2)), 2);
}

// Skew-merged involutions of length n: 2^(n-1).
inline Count skew_merged_involutions_total(int n) {
  if (n < 1) throw std::domain_error("skew_merged_involutions_total needs n >= 1");
  return pow2(n - 1);
}

// Brute force: tableaux of the shapes (k, 2, 1^(n-k-2)), 2 <= k <= n-2.
inline Count count_near_hook_tableaux(int n) {
  Count total = 0;
  for (int k = 2; k <= n - 2; ++k) {
    std::vector<int> rows{k, 2};
    rows.resize(n - k, 1);
    for_each_tableau_of_shape(Shape(rows), [&](const Tableau&) { total = checked_add(total, 1); });
  }
  return total;
}

// ---------------------------------------------------------------------------
// Log-concavity.

struct LogConcavityReport {
  ClassLabel label;
  int n = 0;
  int k_min = 1;
  int k_max = 0;
  bool holds = true;
  std::vector<int> witnesses;  // interior k with c(k-1) c(k+1) > c(k)^2
};

inline LogConcavityReport check_log_concavity(const ClassSequence& seq) {
  LogConcavityReport r{seq.label, seq.n, seq.k_min, seq.k_max, true, {}};
  for (int k = seq.k_min + 1; k < seq.k_max; ++k) {
    const WideCount outer = static_cast<WideCount>(seq.at(k - 1)) * seq.at(k + 1);
    const WideCount inner = static_cast<WideCount>(seq.at(k)) * seq.at(k);
    if (outer > inner) r.witnesses.push_back(k);
  }
  r.holds = r.witnesses.empty();
  return r;
}

enum class CountMethod { raw, shape };

struct ConjectureRow {
  ClassSequence sequence;
  LogConcavityReport report;
};

// u(n,k) log-concave in k for every n <= n_max.
inline std::vector<ConjectureRow> verify_conjecture(int n_max, const Budget& budget = {},
                                                    int threads = 1,
                                                    CountMethod method = CountMethod::raw) {
  if (n_max < 1) throw std::domain_error("verify_conjecture: n_max must be at least 1");
  const ClassLabel u{ClassKind::all_permutations};
  if (method == CountMethod::raw) require_budget(u, n_max, budget);
  std::vector<ConjectureRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    ClassSequence s = method == CountMethod::raw ? sequence(u, n, budget, threads)
                                                 : shape_sequence(u, n);
    LogConcavityReport r = check_log_concavity(s);
    rows.push_back({std::move(s), std::move(r)});
  }
  return rows;
}

}  // namespace ulam
