#pragma once

// Permutations in one-line notation (values and positions are 1-based) and
// the statistics built on them: longest increasing subsequence, Ulam distance,
// and pattern containment.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulam {

namespace detail {

// Patience sorting: tails[j] is the smallest possible last value of an
// increasing subsequence of length j+1 seen so far.
template <typename Buffer>
inline int patience_length(std::span<const int> word, Buffer& tails) {
  int len = 0;
  for (int v : word) {
    auto end = tails.begin() + len;
    auto it = std::lower_bound(tails.begin(), end, v);
    *it = v;
    if (it == end) ++len;
  }
  return len;
}

inline int lis_of_word(std::span<const int> word) {
  if (word.size() <= 64) {
    std::array<int, 64> tails;
    return patience_length(word, tails);
  }
  std::vector<int> tails(word.size());
  return patience_length(word, tails);
}

inline int lds_of_word(std::span<const int> word) {
  if (word.size() <= 64) {
    std::array<int, 64> neg;
    for (std::size_t i = 0; i < word.size(); ++i) neg[i] = -word[i];
    return lis_of_word(std::span<const int>(neg.data(), word.size()));
  }
  std::vector<int> neg(word.begin(), word.end());
  for (int& v : neg) v = -v;
  return lis_of_word(neg);
}

}  // namespace detail

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v]) {
        throw std::invalid_argument("not a permutation of 1.." +
                                    std::to_string(word_.size()));
      }
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation length");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  // p(i), 1-based position.
  int operator()(int position) const { return word_.at(position - 1); }

  std::span<const int> word() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// "3,1,4,2"; the empty string is the empty permutation.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> word;
  if (text.empty()) return Permutation();
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("bad permutation token '" +
                                  std::string(token) + "'");
    }
    word.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(word));
}

inline std::string to_string(const Permutation& p) {
  std::string s;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(p(i));
  }
  return s;
}

inline int lis_length(const Permutation& p) {
  if (p.empty()) throw std::domain_error("lis_length of empty permutation");
  return detail::lis_of_word(p.word());
}

// Longest decreasing subsequence.
inline int lds_length(const Permutation& p) {
  if (p.empty()) throw std::domain_error("lds_length of empty permutation");
  return detail::lds_of_word(p.word());
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> w(p.size());
  for (int i = 1; i <= p.size(); ++i) w[p(i) - 1] = i;
  return Permutation(std::move(w));
}

inline Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw std::domain_error("compose: length mismatch");
  }
  std::vector<int> w(p.size());
  for (int i = 1; i <= p.size(); ++i) w[i - 1] = p(q(i));
  return Permutation(std::move(w));
}

inline bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(p(i)) != i) return false;
  }
  return true;
}

// Minimum number of remove-and-reinsert moves between p and q. Against the
// identity this is n - lis(p); a general pair is relabelled through q^-1 so
// that q becomes the identity.
inline int ulam_distance(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw std::domain_error("ulam_distance: length mismatch");
  }
  if (p.empty()) throw std::domain_error("ulam_distance of empty permutations");
  return p.size() - lis_length(compose(inverse(q), p));
}

namespace detail {

// Depth-first search over increasing index tuples; each newly chosen value
// must stand in the same relative order to all earlier choices as the
// corresponding pattern letter does.
inline bool extend_match(std::span<const int> text, std::span<const int> pat,
                         std::size_t depth, std::size_t start,
                         std::array<int, 16>& chosen) {
  if (depth == pat.size()) return true;
  const std::size_t remaining = pat.size() - depth;
  for (std::size_t i = start; i + remaining <= text.size(); ++i) {
    const int v = text[i];
    bool consistent = true;
    for (std::size_t j = 0; j < depth; ++j) {
      if ((v < chosen[j]) != (pat[depth] < pat[j])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen[depth] = v;
    if (extend_match(text, pat, depth + 1, i + 1, chosen)) return true;
  }
  return false;
}

inline bool word_contains_pattern(std::span<const int> text,
                                  std::span<const int> pat) {
  if (pat.size() > text.size()) return false;
  if (pat.size() > 16) {
    throw std::domain_error("contains_pattern supports patterns up to length 16");
  }
  std::array<int, 16> chosen{};
  return extend_match(text, pat, 0, 0, chosen);
}

}  // namespace detail

inline bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) {
    throw std::domain_error("contains_pattern: pattern longer than permutation");
  }
  return detail::word_contains_pattern(p.word(), pattern.word());
}

// Skew-merged permutations are exactly those avoiding 2143 and 3412.
inline bool is_skew_merged(const Permutation& p) {
  static constexpr std::array<int, 4> k2143{2, 1, 4, 3};
  static constexpr std::array<int, 4> k3412{3, 4, 1, 2};
  return !detail::word_contains_pattern(p.word(), k2143) &&
         !detail::word_contains_pattern(p.word(), k3412);
}

}  // namespace ulam

template <>
struct std::hash<ulam::Permutation> {
  std::size_t operator()(const ulam::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.word()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
