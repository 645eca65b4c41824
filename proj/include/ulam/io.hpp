#pragma once

// Text formats for sequences and reports.
//
//   CSV:  header "n,k,count", one row per k of the support.
//   JSON sequence: {"class":"u","n":4,"counts":[{"k":1,"count":1},...]}
//   JSON log-concavity report: {"class":"u","n":4,"holds":true,"witnesses":[]}

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "ulam/census.hpp"

namespace ulam {

inline std::string to_csv(const std::vector<ClassSequence>& seqs) {
  std::string out = "n,k,count\n";
  for (const auto& s : seqs) {
    for (const auto& [k, c] : s.counts) {
      out += std::to_string(s.n) + "," + std::to_string(k) + "," + std::to_string(c) + "\n";
    }
  }
  return out;
}

inline std::string to_csv(const ClassSequence& s) { return to_csv(std::vector<ClassSequence>{s}); }

// Reads rows written by to_csv back into one sequence per n; the label is
// not part of the CSV and is supplied by the caller.
inline std::vector<ClassSequence> sequences_from_csv(std::string_view text, const ClassLabel& label) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "n,k,count") {
    throw std::invalid_argument("CSV must start with the header n,k,count");
  }
  std::vector<ClassSequence> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    long long n = 0, k = 0;
    unsigned long long c = 0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%lld,%lld,%llu%c", &n, &k, &c, &tail) != 3) {
      throw std::invalid_argument("bad CSV row '" + line + "'");
    }
    if (out.empty() || out.back().n != n) {
      ClassSequence s;
      s.label = label;
      s.n = static_cast<int>(n);
      s.k_min = static_cast<int>(k);
      out.push_back(std::move(s));
    }
    auto& s = out.back();
    s.counts[static_cast<int>(k)] = c;
    s.k_max = static_cast<int>(k);
  }
  return out;
}

inline nlohmann::json to_json(const ClassSequence& s) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [k, c] : s.counts) counts.push_back({{"k", k}, {"count", c}});
  return {{"class", to_string(s.label)}, {"n", s.n}, {"counts", counts}};
}

inline ClassSequence sequence_from_json(const nlohmann::json& j) {
  ClassSequence s;
  s.label = parse_class_label(j.at("class").get<std::string>());
  s.n = j.at("n").get<int>();
  std::tie(s.k_min, s.k_max) = support(s.label, s.n);
  for (const auto& e : j.at("counts")) s.counts[e.at("k").get<int>()] = e.at("count").get<Count>();
  return s;
}

inline nlohmann::json to_json(const LogConcavityReport& r) {
  return {{"class", to_string(r.label)},
          {"n", r.n},
          {"holds", r.holds},
          {"witnesses", r.witnesses}};
}

}  // namespace ulam
