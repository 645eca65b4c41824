#pragma once

// Exhaustive verification harnesses: closed forms against brute force, and
// injectivity / codomain checks for each injection over its full domain.

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ulam/census.hpp"
#include "ulam/injections.hpp"

namespace ulam {

struct FormulaCheck {
  std::string name;  // e.g. "h(n,k) = C(n-1,k-1)"
  int n = 0;
  int k = 0;         // 0 for totals
  Count expected = 0;
  Count counted = 0;
  bool ok() const { return expected == counted; }
};

struct FormulaCaps {
  int hooks = 15;
  int two_row_paths = 14;
  int two_row_involutions = 12;
  int skew_merged = 11;
  int protected24 = 14;
  int hook_pairs = 8;
};

// Every closed form against an independent count, up to min(n_max, cap).
inline std::vector<FormulaCheck> verify_formulas(int n_max, const FormulaCaps& caps = {},
                                                 const Budget& budget = {}, int threads = 1) {
  std::vector<FormulaCheck> out;
  auto per_k = [&](const std::string& name, const ClassLabel& c, int cap,
                   const std::function<Count(int, int)>& brute) {
    for (int n = 1; n <= std::min(n_max, cap); ++n) {
      for (int k = 1; k <= n; ++k) out.push_back({name, n, k, closed_form(c, n, k), brute(n, k)});
    }
  };
  auto from_sequence = [&](const ClassLabel& c) {
    return [&, c, cached = std::optional<ClassSequence>()](int n, int k) mutable {
      if (!cached || cached->n != n) cached = sequence(c, n, budget, threads);
      return cached->at(k);
    };
  };

  per_k("h(n,k) = C(n-1,k-1)", {ClassKind::hooks}, caps.hooks,
        from_sequence({ClassKind::hooks}));
  per_k("a(n,k) = C(n,k)(2k-n+1)/(k+1) [two-row tableaux as paths]",
        {ClassKind::two_row_involutions}, caps.two_row_paths,
        [](int n, int k) { return static_cast<Count>(paths(n, k).size()); });
  per_k("a(n,k) = C(n,k)(2k-n+1)/(k+1) [321-avoiding involutions]",
        {ClassKind::two_row_involutions}, caps.two_row_involutions,
        from_sequence({ClassKind::two_row_involutions}));
  per_k("sm(n,k) = C(n-1,k-1)", {ClassKind::skew_merged_involutions}, caps.skew_merged,
        from_sequence({ClassKind::skew_merged_involutions}));
  for (int n = 1; n <= std::min(n_max, caps.skew_merged); ++n) {
    out.push_back({"sm(n) = 2^(n-1)", n, 0, skew_merged_involutions_total(n),
                   sequence({ClassKind::skew_merged_involutions}, n, budget, threads).total()});
  }
  per_k("m(n,k) = h(n,k)^2", {ClassKind::hook_pair_permutations}, caps.hook_pairs,
        from_sequence({ClassKind::hook_pair_permutations}));
  for (int n = 4; n <= std::min(n_max, caps.protected24); ++n) {
    out.push_back({"p(n) = (n-3) 2^(n-3)", n, 0, protected24_total(n),
                   sequence({ClassKind::protected24_tableaux}, n, budget, threads).total()});
    out.push_back({"b(n) = (n-4) 2^(n-2) + 2", n, 0, near_hook_total(n),
                   count_near_hook_tableaux(n)});
  }
  return out;
}

// ---------------------------------------------------------------------------

enum class InjectionKind { hook, protected_area, flip, lift_hook, lift_two_row };

inline const char* to_string(InjectionKind k) {
  switch (k) {
    case InjectionKind::hook: return "hook";
    case InjectionKind::protected_area: return "protected";
    case InjectionKind::flip: return "flip";
    case InjectionKind::lift_hook: return "lift-hook";
    case InjectionKind::lift_two_row: return "lift-two-row";
  }
  return "?";
}

struct InjectionParams {
  int n = 0;
  int k = 0;  // first-row length / LIS of the first input; the middle k for protected
  int l = 0;  // hook: second input's first row (default k+2); protected: l
  int m = 0;  // protected only
};

struct InjectionReport {
  InjectionKind kind = InjectionKind::hook;
  InjectionParams params;
  Count domain_size = 0;
  Count distinct_images = 0;
  Count codomain_failures = 0;  // image outside the declared codomain
  Count property_failures = 0;  // type change, protected-area change, or failed preimage
  std::vector<std::string> counterexamples;

  bool injective() const { return distinct_images == domain_size; }
  bool ok() const { return injective() && codomain_failures == 0 && property_failures == 0; }
};

namespace detail {

template <typename T>
struct PairHash {
  std::size_t operator()(const std::pair<T, T>& p) const noexcept {
    const std::size_t a = std::hash<T>{}(p.first);
    return a ^ (std::hash<T>{}(p.second) + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  }
};

inline constexpr std::size_t kMaxCounterexamples = 10;

// Applies `inject` to every pair in xs x ys. `check` returns an empty string
// when the image passes the codomain test and a description otherwise;
// `property` does the same for the kind-specific extra condition.
template <typename In, typename Out, typename Inject, typename Check, typename Property>
void run_injection(const std::vector<In>& xs, const std::vector<In>& ys, const Budget& budget,
                   InjectionReport& report, Inject inject, Check check, Property property) {
  const WideCount domain = static_cast<WideCount>(xs.size()) * ys.size();
  if (domain > budget.max_scan) {
    throw BudgetExceeded("injection domain of " + to_string(domain) + " pairs exceeds budget");
  }
  report.domain_size = static_cast<Count>(domain);
  std::unordered_set<std::pair<Out, Out>, PairHash<Out>> seen;
  seen.reserve(static_cast<std::size_t>(domain));
  auto note = [&](std::string msg) {
    if (report.counterexamples.size() < kMaxCounterexamples) {
      report.counterexamples.push_back(std::move(msg));
    }
  };
  for (const In& x : xs) {
    for (const In& y : ys) {
      std::pair<Out, Out> img = inject(x, y);
      auto where = [&] {
        return to_string(x) + " ; " + to_string(y) + " -> " + to_string(img.first) + " ; " +
               to_string(img.second);
      };
      if (std::string why = check(img); !why.empty()) {
        ++report.codomain_failures;
        note("codomain: " + why + ": " + where());
      }
      if (std::string why = property(x, y, img); !why.empty()) {
        ++report.property_failures;
        note(why + ": " + where());
      }
      if (seen.contains(img)) {
        note("collision: " + where());
      } else {
        seen.insert(std::move(img));
      }
    }
  }
  report.distinct_images = seen.size();
}

inline std::vector<Permutation> permutations_where(int n, const std::function<bool(const Permutation&)>& keep) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](std::span<const int> w) {
    Permutation p(std::vector<int>(w.begin(), w.end()));
    if (keep(p)) out.push_back(std::move(p));
  });
  return out;
}

}  // namespace detail

inline InjectionReport verify_injection(InjectionKind kind, InjectionParams params,
                                        const Budget& budget = {}) {
  InjectionReport report;
  report.kind = kind;
  const int n = params.n;
  const int k = params.k;
  if (n < 1) throw std::domain_error("verify_injection: n must be at least 1");

  switch (kind) {
    case InjectionKind::hook: {
      const int l = params.l == 0 ? k + 2 : params.l;
      params.l = l;
      if (n < 3 || k < 1 || k > l - 2 || l > n) {
        throw std::domain_error("verify_injection(hook): need 1 <= k <= l-2 <= n-2");
      }
      detail::run_injection<Tableau, Tableau>(
          hooks(n, k), hooks(n, l), budget, report,
          [&](const Tableau& a, const Tableau& b) { return hook_inject(n, k, l, a, b); },
          [&](const std::pair<Tableau, Tableau>& img) -> std::string {
            if (!is_hook(img.first) || img.first.first_row_length() != k + 1) return "first not in H(n,k+1)";
            if (!is_hook(img.second) || img.second.first_row_length() != l - 1) return "second not in H(n,l-1)";
            return {};
          },
          [&](const Tableau& a, const Tableau& b, const std::pair<Tableau, Tableau>& img) -> std::string {
            if (l != k + 2) return {};
            if (hook_type(a) != hook_type(img.first) || hook_type(b) != hook_type(img.second)) {
              return "pair type changed";
            }
            return {};
          });
      break;
    }
    case InjectionKind::protected_area: {
      const int l = params.l;
      const int m = params.m;
      if (l < 1 || m < l) throw std::domain_error("verify_injection(protected): bad (l,m)");
      detail::run_injection<Tableau, Tableau>(
          protected_tableaux(n, k - 1, l, m), protected_tableaux(n, k + 1, l, m), budget, report,
          [&](const Tableau& a, const Tableau& b) { return protected_inject(n, k, l, m, a, b); },
          [&](const std::pair<Tableau, Tableau>& img) -> std::string {
            for (const Tableau* t : {&img.first, &img.second}) {
              if (t->first_row_length() != k || !is_lm_protected(*t, l, m)) {
                return "not in P(n,k) with the same (l,m)";
              }
            }
            return {};
          },
          [&](const Tableau& a, const Tableau& b, const std::pair<Tableau, Tableau>& img) -> std::string {
            if (protected_decompose(a).area != protected_decompose(img.first).area ||
                protected_decompose(b).area != protected_decompose(img.second).area) {
              return "protected area changed";
            }
            return {};
          });
      break;
    }
    case InjectionKind::flip: {
      if (n - k > k || k > n - 2) throw std::domain_error("verify_injection(flip): need n-k <= k <= n-2");
      auto as_pairs = [](const PathPair& p) { return std::pair{p.first, p.second}; };
      detail::run_injection<LatticePath, LatticePath>(
          paths(n, k), paths(n, k + 2), budget, report,
          [&](const LatticePath& p, const LatticePath& q) { return as_pairs(flip_inject(p, q)); },
          [&](const std::pair<LatticePath, LatticePath>& img) -> std::string {
            if (!img.first.in_class(n, k + 1) || !img.second.in_class(n, k + 1)) return "not in L(n,k+1)";
            return {};
          },
          [&](const LatticePath& p, const LatticePath& q,
              const std::pair<LatticePath, LatticePath>& img) -> std::string {
            const auto back = flip_preimage(img.first, img.second);
            if (!back || back->first != p || back->second != q) return "preimage mismatch";
            return {};
          });
      break;
    }
    case InjectionKind::lift_hook:
    case InjectionKind::lift_two_row: {
      const bool hook = kind == InjectionKind::lift_hook;
      if (hook ? (n < 3 || k < 1 || k + 2 > n) : (n - k > k || k > n - 2)) {
        throw std::domain_error("verify_injection(lift): k out of range");
      }
      auto in_class = [hook](const Permutation& p) {
        return hook ? is_hook(rsk(p).insertion) : lds_length(p) <= 2;
      };
      const auto xs = detail::permutations_where(n, [&](const Permutation& p) {
        return lis_length(p) == k && in_class(p);
      });
      const auto ys = detail::permutations_where(n, [&](const Permutation& p) {
        return lis_length(p) == k + 2 && in_class(p);
      });
      detail::run_injection<Permutation, Permutation>(
          xs, ys, budget, report,
          [&](const Permutation& p1, const Permutation& p2) {
            if (hook) {
              return lift([&](const Tableau& a, const Tableau& b) { return hook_inject(n, k, k + 2, a, b); },
                          p1, p2);
            }
            return lift([](const Tableau& a, const Tableau& b) { return two_row_inject(a, b); }, p1, p2);
          },
          [&](const std::pair<Permutation, Permutation>& img) -> std::string {
            for (const Permutation* w : {&img.first, &img.second}) {
              if (lis_length(*w) != k + 1 || !in_class(*w)) return "image leaves the class or has wrong LIS";
            }
            return {};
          },
          [](const Permutation&, const Permutation&, const std::pair<Permutation, Permutation>&) {
            return std::string();
          });
      break;
    }
  }
  report.params = params;
  return report;
}

// All admissible k for the kind at size n, in increasing order.
inline std::vector<int> admissible_k(InjectionKind kind, int n, int l = 0, int m = 0) {
  std::vector<int> ks;
  for (int k = 1; k <= n; ++k) {
    bool ok = false;
    switch (kind) {
      case InjectionKind::hook:
      case InjectionKind::lift_hook:
        ok = n >= 3 && k + 2 <= n;
        break;
      case InjectionKind::flip:
      case InjectionKind::lift_two_row:
        ok = n - k <= k && k <= n - 2;
        break;
      case InjectionKind::protected_area:
        ok = k - 1 >= l && k + 1 <= l + n - m;
        break;
    }
    if (ok) ks.push_back(k);
  }
  return ks;
}

}  // namespace ulam
