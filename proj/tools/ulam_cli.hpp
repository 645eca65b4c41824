#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it with captured streams.
//
// Exit status: 0 success / verified, 1 verification failure, 2 usage error or
// refused enumeration.

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ulam/ulam.hpp"

namespace ulam::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Parse>
auto parse_arg(const std::string& flag, const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + " \"" + text + "\": " + e.what());
  }
}

inline std::pair<int, int> parse_lm(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma != std::string::npos) {
      std::size_t used_l = 0, used_m = 0;
      const int l = std::stoi(text.substr(0, comma), &used_l);
      const int m = std::stoi(text.substr(comma + 1), &used_m);
      if (used_l == comma && used_m == text.size() - comma - 1 && l >= 1 && m >= l) return {l, m};
    }
  } catch (const std::exception&) {
  }
  throw UsageError("--lm \"" + text + "\": expected l,m with 1 <= l <= m");
}

inline void print_report(std::ostream& out, const InjectionReport& r) {
  out << to_string(r.kind) << " n=" << r.params.n << " k=" << r.params.k;
  if (r.kind == InjectionKind::hook) out << " l=" << r.params.l;
  if (r.kind == InjectionKind::protected_area) out << " lm=" << r.params.l << "," << r.params.m;
  out << ": domain " << r.domain_size << ", distinct images " << r.distinct_images
      << ", codomain failures " << r.codomain_failures << ", property failures "
      << r.property_failures << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& c : r.counterexamples) out << "  " << c << "\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ulam-distance log-concavity toolkit", "ulam"};
  app.require_subcommand(1);

  const int default_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int threads = default_threads;

  // sequence
  auto* seq_cmd = app.add_subcommand("sequence", "Count a class by LIS / first-row length");
  std::string seq_class;
  int seq_n = 0;
  std::string seq_format = "csv";
  std::string seq_lm;
  std::string seq_method = "raw";
  seq_cmd->add_option("--class", seq_class, "u, i, h, a, b, m, sm, p24, or p with --lm")->required();
  seq_cmd->add_option("--n", seq_n, "Size")->required();
  seq_cmd->add_option("--format", seq_format)->check(CLI::IsMember({"csv", "json"}));
  seq_cmd->add_option("--lm", seq_lm, "Protected-area parameters l,m for class p");
  seq_cmd->add_option("--method", seq_method, "raw enumeration or shape-wise counting (u, i)")
      ->check(CLI::IsMember({"raw", "shape"}));
  seq_cmd->add_option("--threads", threads);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification");
  verify_cmd->require_subcommand(1);
  auto* conj_cmd = verify_cmd->add_subcommand("conjecture", "u(n,k) log-concave for n <= n-max");
  int conj_n_max = 0;
  std::string conj_method = "raw";
  std::string conj_format = "text";
  conj_cmd->add_option("--n-max", conj_n_max)->required();
  conj_cmd->add_option("--method", conj_method)->check(CLI::IsMember({"raw", "shape"}));
  conj_cmd->add_option("--format", conj_format)->check(CLI::IsMember({"text", "json"}));
  conj_cmd->add_option("--threads", threads);

  auto* inj_cmd = verify_cmd->add_subcommand("injection", "Injectivity over the full domain");
  std::string inj_kind;
  int inj_n = 0;
  std::optional<int> inj_k;
  std::string inj_lm = "2,4";
  std::string inj_class = "hook";
  inj_cmd->add_option("--kind", inj_kind)->required()->check(
      CLI::IsMember({"hook", "protected", "flip", "lift"}));
  inj_cmd->add_option("--n", inj_n)->required();
  inj_cmd->add_option("--k", inj_k,
                      "First input's first-row length (protected: the target length); all "
                      "admissible k when omitted");
  inj_cmd->add_option("--lm", inj_lm, "l,m for --kind protected");
  inj_cmd->add_option("--class", inj_class, "Class lifted by --kind lift")
      ->check(CLI::IsMember({"hook", "two-row"}));

  auto* form_cmd = verify_cmd->add_subcommand("formulas", "Closed forms against brute force");
  int form_n_max = 0;
  form_cmd->add_option("--n-max", form_n_max)->required();
  form_cmd->add_option("--threads", threads);

  // rsk
  auto* rsk_cmd = app.add_subcommand("rsk", "Robinson-Schensted in either direction");
  std::string rsk_perm, rsk_inverse_arg;
  auto* perm_opt = rsk_cmd->add_option("--perm", rsk_perm, "Permutation, e.g. 3,1,4,2");
  auto* inv_opt = rsk_cmd->add_option("--inverse", rsk_inverse_arg, "Tableau pair P;Q");
  perm_opt->excludes(inv_opt);
  rsk_cmd->require_option(1);

  // inject
  auto* inject_cmd = app.add_subcommand("inject", "Apply an injection to explicit tableaux");
  inject_cmd->require_subcommand(1);
  std::string t1_text, t2_text;
  auto* inject_hook = inject_cmd->add_subcommand("hook", "Hook injection; n, k, l read off the inputs");
  inject_hook->add_option("--t1", t1_text)->required();
  inject_hook->add_option("--t2", t2_text)->required();
  auto* inject_prot = inject_cmd->add_subcommand("protected", "Protected-area injection");
  inject_prot->add_option("--t1", t1_text)->required();
  inject_prot->add_option("--t2", t2_text)->required();

  // path
  auto* path_cmd = app.add_subcommand("path", "Two-row tableaux as lattice paths");
  std::string path_tableau, path_steps;
  path_cmd->add_option("--tableau", path_tableau, "Tableau with at most two rows");
  path_cmd->add_option("--steps", path_steps, "E/N path, converted to a tableau");
  std::string flip_p, flip_q;
  auto* flip_cmd = path_cmd->add_subcommand("flip", "Flip injection on L(n,k) x L(n,k+2)");
  flip_cmd->add_option("--p", flip_p)->required();
  flip_cmd->add_option("--q", flip_q)->required();
  std::string unflip_r, unflip_s;
  auto* unflip_cmd = path_cmd->add_subcommand("unflip", "Preimage under the flip injection");
  unflip_cmd->add_option("--r", unflip_r)->required();
  unflip_cmd->add_option("--s", unflip_s)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Budget budget = Budget::from_env();
  try {
    if (*seq_cmd) {
      ClassLabel label = detail::parse_arg("--class", seq_class, [](const std::string& s) {
        return s == "p" ? ClassLabel{ClassKind::protected_tableaux, 0, 0} : parse_class_label(s);
      });
      if (label.kind == ClassKind::protected_tableaux && label.l == 0) {
        if (seq_lm.empty()) throw UsageError("--class p needs --lm l,m");
        std::tie(label.l, label.m) = detail::parse_lm(seq_lm);
      }
      if (seq_n < 1) throw UsageError("--n must be at least 1");
      const ClassSequence s = seq_method == "shape" ? shape_sequence(label, seq_n)
                                                    : sequence(label, seq_n, budget, threads);
      if (seq_format == "json") {
        out << to_json(s).dump() << "\n";
      } else {
        out << to_csv(s);
      }
      return kOk;
    }

    if (*conj_cmd) {
      if (conj_n_max < 1) throw UsageError("--n-max must be at least 1");
      const auto rows = verify_conjecture(conj_n_max, budget, threads,
                                          conj_method == "shape" ? CountMethod::shape : CountMethod::raw);
      bool all = true;
      nlohmann::json reports = nlohmann::json::array();
      for (const auto& row : rows) {
        all = all && row.report.holds;
        if (conj_format == "json") {
          reports.push_back(to_json(row.report));
          continue;
        }
        out << "n=" << row.sequence.n << " u:";
        for (const auto& [k, c] : row.sequence.counts) out << " " << c;
        out << (row.report.holds ? "  holds" : "  FAILS");
        for (int k : row.report.witnesses) out << " k=" << k;
        out << "\n";
      }
      if (conj_format == "json") out << reports.dump() << "\n";
      if (conj_method == "raw") {
        const Budget cap;
        int reach = 1;
        while (reach < 20 && scan_size({ClassKind::all_permutations}, reach + 1) <= cap.max_scan) ++reach;
        if (conj_format == "text" && conj_n_max < 15) {
          out << "raw enumeration covers n <= " << reach
              << " by default; n = 13..15 is out of reach this way and stays unverified here\n";
        }
      }
      return all ? kOk : kVerificationFailed;
    }

    if (*inj_cmd) {
      if (inj_n < 1) throw UsageError("--n must be at least 1");
      InjectionKind kind = InjectionKind::hook;
      int l = 0, m = 0;
      if (inj_kind == "protected") {
        kind = InjectionKind::protected_area;
        std::tie(l, m) = detail::parse_lm(inj_lm);
      } else if (inj_kind == "flip") {
        kind = InjectionKind::flip;
      } else if (inj_kind == "lift") {
        kind = inj_class == "hook" ? InjectionKind::lift_hook : InjectionKind::lift_two_row;
      }
      std::vector<int> ks = inj_k ? std::vector<int>{*inj_k} : admissible_k(kind, inj_n, l, m);
      if (ks.empty()) {
        throw UsageError("no admissible k for --kind " + inj_kind + " at n=" + std::to_string(inj_n));
      }
      bool all = true;
      for (int k : ks) {
        InjectionParams params{inj_n, k, l, m};
        const InjectionReport r = verify_injection(kind, params, budget);
        detail::print_report(out, r);
        all = all && r.ok();
      }
      return all ? kOk : kVerificationFailed;
    }

    if (*form_cmd) {
      if (form_n_max < 1) throw UsageError("--n-max must be at least 1");
      bool all = true;
      for (const auto& c : verify_formulas(form_n_max, {}, budget, threads)) {
        all = all && c.ok();
        out << c.name << " n=" << c.n;
        if (c.k > 0) out << " k=" << c.k;
        out << ": formula " << c.expected << ", counted " << c.counted << (c.ok() ? "" : "  MISMATCH")
            << "\n";
      }
      return all ? kOk : kVerificationFailed;
    }

    if (*rsk_cmd) {
      if (!rsk_perm.empty()) {
        const Permutation p = detail::parse_arg("--perm", rsk_perm, parse_permutation);
        if (p.empty()) throw UsageError("--perm: empty permutation");
        const TableauPair pq = rsk(p);
        out << "P " << to_string(pq.insertion) << "\nQ " << to_string(pq.recording) << "\n";
        return kOk;
      }
      const auto semi = rsk_inverse_arg.find(';');
      if (semi == std::string::npos) throw UsageError("--inverse \"" + rsk_inverse_arg + "\": expected P;Q");
      const Tableau P = detail::parse_arg("--inverse", rsk_inverse_arg.substr(0, semi), parse_tableau);
      const Tableau Q = detail::parse_arg("--inverse", rsk_inverse_arg.substr(semi + 1), parse_tableau);
      if (P.shape() != Q.shape()) throw UsageError("--inverse: P and Q have different shapes");
      out << to_string(rsk_inverse(P, Q)) << "\n";
      return kOk;
    }

    if (*inject_cmd) {
      const Tableau t1 = detail::parse_arg("--t1", t1_text, parse_tableau);
      const Tableau t2 = detail::parse_arg("--t2", t2_text, parse_tableau);
      std::pair<Tableau, Tableau> img;
      if (*inject_hook) {
        const int n = t1.size();
        const int k = t1.first_row_length();
        const int l = t2.first_row_length();
        if (!is_hook(t1) || !is_hook(t2) || t2.size() != n || n < 3 || k < 1 || k > l - 2) {
          throw UsageError("inject hook: need hooks of one size n >= 3 with first rows k <= l-2");
        }
        img = hook_inject(n, k, l, t1, t2);
      } else {
        if (t1.empty() || t2.size() != t1.size()) throw UsageError("inject protected: sizes differ");
        const auto d = protected_decompose(t1);
        const int k = t1.first_row_length() + 1;
        if (t2.first_row_length() != k + 1 || !is_lm_protected(t1, d.l, d.m) ||
            !is_lm_protected(t2, d.l, d.m)) {
          throw UsageError("inject protected: need (l,m)-protected inputs with first rows k-1, k+1");
        }
        img = protected_inject(t1.size(), k, d.l, d.m, t1, t2);
      }
      out << to_string(img.first) << " " << to_string(img.second) << "\n";
      return kOk;
    }

    if (*path_cmd) {
      auto parse_path = [](const std::string& s) { return LatticePath(s); };
      if (*flip_cmd) {
        const LatticePath p = detail::parse_arg("--p", flip_p, parse_path);
        const LatticePath q = detail::parse_arg("--q", flip_q, parse_path);
        const int n = p.size(), k = p.east();
        if (q.size() != n || q.east() != k + 2 || n - k > k || k > n - 2) {
          throw UsageError("path flip: need P in L(n,k), Q in L(n,k+2), n-k <= k <= n-2");
        }
        const PathPair r = flip_inject(p, q);
        out << r.first.steps() << " " << r.second.steps() << "\n";
        return kOk;
      }
      if (*unflip_cmd) {
        const LatticePath r = detail::parse_arg("--r", unflip_r, parse_path);
        const LatticePath s = detail::parse_arg("--s", unflip_s, parse_path);
        if (r.size() != s.size() || r.east() != s.east()) {
          throw UsageError("path unflip: R and S must have the same length and endpoint");
        }
        const auto pre = flip_preimage(r, s);
        if (!pre) {
          out << "no preimage\n";
          return kVerificationFailed;
        }
        out << pre->first.steps() << " " << pre->second.steps() << "\n";
        return kOk;
      }
      if (!path_tableau.empty()) {
        const Tableau t = detail::parse_arg("--tableau", path_tableau, parse_tableau);
        if (t.row_count() > 2) throw UsageError("--tableau \"" + path_tableau + "\": more than two rows");
        out << tableau_to_path(t).steps() << "\n";
        return kOk;
      }
      if (!path_steps.empty()) {
        const LatticePath p = detail::parse_arg("--steps", path_steps, parse_path);
        out << to_string(path_to_tableau(p)) << "\n";
        return kOk;
      }
      throw UsageError("path: give --tableau, --steps, or a flip/unflip subcommand");
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ulam::cli
