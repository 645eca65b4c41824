#pragma once

// Exact counting arithmetic. Every operation that can leave the 64-bit range
// throws instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulam {

using Count = std::uint64_t;
using WideCount = unsigned __int128;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("count overflow in addition");
  }
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("count overflow in multiplication");
  }
  return r;
}

inline Count factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  Count r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<Count>(i));
  return r;
}

// C(n, k); zero outside 0 <= k <= n.
inline Count binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Each intermediate r * (n-k+i) / i is itself a binomial coefficient, so the
  // division is exact; the product is widened so it cannot wrap.
  WideCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<WideCount>(n - k + i) / static_cast<WideCount>(i);
    if (r > static_cast<WideCount>(UINT64_MAX)) {
      throw std::overflow_error("binomial(" + std::to_string(n) + "," +
                                std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<Count>(r);
}

inline Count pow2(int e) {
  if (e < 0 || e > 63) throw std::domain_error("pow2 exponent out of range");
  return Count{1} << e;
}

// Number of involutions of length n (telephone numbers).
inline Count involution_count(int n) {
  if (n < 0) throw std::domain_error("involution_count of negative n");
  Count prev = 1, cur = 1;  // I(0), I(1)
  if (n == 0) return 1;
  for (int i = 2; i <= n; ++i) {
    Count next = checked_add(cur, checked_mul(static_cast<Count>(i - 1), prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

inline std::string to_string(WideCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace ulam
