#pragma once

// Counting the valid initial tapes of length L for n-ary inputs: words over
// {1, _} with exactly n-1 blanks, no two blanks adjacent, and no blank at
// either end.

#include <cstdint>
#include <string>
#include <vector>

namespace masa {

using Count = std::uint64_t;

/// Largest L for which counts fit in 64 bits (Fib(92)).
inline constexpr int kMaxCountLength = 92;
/// Bound for exhaustive enumeration of {1, _}^L.
inline constexpr int kMaxEnumerationLength = 24;

/// f(L, n) from f(L+1, n) = f(L, n) + f(L-1, n-1), with f(L, 1) = 1 and
/// f(L, n) = 0 for n >= 2, L < 2n - 1.
Count count_valid(int length, int parts);

/// Valid words as "1"/"_" strings in lexicographic order ('1' < '_').
std::vector<std::string> enumerate_valid(int length, int parts);

/// Fib(1) = Fib(2) = 1.
Count fib(int n);

/// Largest part count that can be nonzero at `length`: ceil(L/2) + 1.
int max_parts(int length);

/// Whether sum_{n=1}^{ceil(L/2)+1} f(L, n) == Fib(L).
bool check_fib_identity(int length);

struct ClosedFormCheck {
  Count value = 0;
  bool matches = false;
};

/// binom(L - n + 1, n - 1), compared against count_valid. Cross-check only.
ClosedFormCheck closed_form_printed(int length, int parts);

/// binom(L - n, n - 1); agrees with count_valid wherever it has been checked.
Count closed_form_corrected(int length, int parts);

/// binom(n, k), 0 when k < 0, k > n or n < 0.
Count binomial(std::int64_t n, std::int64_t k);

struct ArgmaxReport {
  int parts = 1;          // smallest n maximizing f(L, n)
  Count count = 0;        // f(L, parts)
  double threshold = 0;   // (7 + 5L - sqrt(9 + 10L + 5L^2)) / 10
  double asymptote = 0;   // (7 - sqrt5)/10 + L/(phi + 2)
};

ArgmaxReport argmax_n(int length);

/// (n+1)(L-n) / ((L-2n-1)(L-2n)) as printed; NaN where the denominator vanishes.
double printed_ratio(int length, int parts);

}  // namespace masa
