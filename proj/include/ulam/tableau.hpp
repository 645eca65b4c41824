#pragma once

// Integer partitions (Ferrers shapes) and standard Young tableaux stored as
// rows of entries.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulam {

class Shape {
 public:
  Shape() = default;

  explicit Shape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 1 || (i > 0 && rows_[i] > rows_[i - 1])) {
        throw std::invalid_argument("row lengths must be positive and weakly decreasing");
      }
    }
  }

  Shape(std::initializer_list<int> rows) : Shape(std::vector<int>(rows)) {}

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int row(int i) const { return i < row_count() ? rows_[i] : 0; }
  int size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

  // Length of column j (0-based).
  int column(int j) const {
    return static_cast<int>(std::count_if(rows_.begin(), rows_.end(),
                                          [j](int r) { return r > j; }));
  }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> rows_;
};

inline std::string to_string(const Shape& s) {
  std::string out = "(";
  for (int i = 0; i < s.row_count(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.row(i));
  }
  return out + ")";
}

// Every partition of n, largest parts first, in reverse lexicographic order.
inline std::vector<Shape> partitions(int n) {
  std::vector<Shape> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau() = default;

  explicit Tableau(Rows rows) : rows_(std::move(rows)) { validate(); }

  Tableau(std::initializer_list<std::vector<int>> rows) : Tableau(Rows(rows)) {}

  const Rows& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int i) const { return rows_.at(i); }

  int size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  bool empty() const { return rows_.empty(); }

  int first_row_length() const {
    return rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  }

  Shape shape() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Shape(std::move(lens));
  }

  std::vector<int> first_column() const {
    std::vector<int> col;
    col.reserve(rows_.size());
    for (const auto& r : rows_) col.push_back(r.front());
    return col;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  void validate() const {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      if (r.empty()) throw std::invalid_argument("tableau has an empty row");
      if (i > 0 && r.size() > rows_[i - 1].size()) {
        throw std::invalid_argument("tableau rows are not weakly decreasing");
      }
      for (std::size_t j = 0; j < r.size(); ++j) {
        const int v = r[j];
        if (v < 1 || v > n || seen[v]) {
          throw std::invalid_argument("tableau entries must be 1.." +
                                      std::to_string(n) + " each once");
        }
        seen[v] = true;
        if (j > 0 && r[j - 1] >= v) {
          throw std::invalid_argument("tableau row is not increasing");
        }
        if (i > 0 && rows_[i - 1][j] >= v) {
          throw std::invalid_argument("tableau column is not increasing");
        }
      }
    }
  }

  Rows rows_;
};

// "1,3/2": rows separated by '/', entries by ','.
inline Tableau parse_tableau(std::string_view text) {
  Tableau::Rows rows;
  if (text.empty()) return Tableau();
  std::size_t pos = 0;
  while (true) {
    std::size_t slash = text.find('/', pos);
    std::string_view row_text =
        text.substr(pos, slash == std::string_view::npos ? std::string_view::npos
                                                         : slash - pos);
    std::vector<int> row;
    std::size_t rp = 0;
    while (true) {
      std::size_t comma = row_text.find(',', rp);
      std::string_view token = row_text.substr(
          rp, comma == std::string_view::npos ? std::string_view::npos : comma - rp);
      if (token.empty() || token.size() > 9 ||
          !std::all_of(token.begin(), token.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("bad tableau token '" + std::string(token) + "'");
      }
      row.push_back(std::stoi(std::string(token)));
      if (comma == std::string_view::npos) break;
      rp = comma + 1;
    }
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return Tableau(std::move(rows));
}

inline std::string to_string(const Tableau& t) {
  std::string s;
  for (int i = 0; i < t.row_count(); ++i) {
    if (i > 0) s += '/';
    const auto& r = t.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0) s += ',';
      s += std::to_string(r[j]);
    }
  }
  return s;
}

}  // namespace ulam

template <>
struct std::hash<ulam::Tableau> {
  std::size_t operator()(const ulam::Tableau& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& r : t.rows()) {
      for (int v : r) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
      h = (h ^ 0xffu) * 1099511628211ull;
    }
    return h;
  }
};
