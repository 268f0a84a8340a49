#include "masa/counting.hpp"

#include "masa/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace masa {

namespace {

void require_countable(int length) {
  if (length > kMaxCountLength) {
    throw ResourceLimitError("length " + std::to_string(length) + " overflows 64-bit counts (limit " +
                             std::to_string(kMaxCountLength) + ")");
  }
}

}  // namespace

Count count_valid(int length, int parts) {
  if (length < 1 || parts < 1) return 0;
  require_countable(length);
  if (parts > max_parts(length)) return 0;
  // f[l][k], l in [0, L], k in [0, n]; row 0 and column 0 stay zero.
  const auto L = static_cast<std::size_t>(length);
  const auto n = static_cast<std::size_t>(parts);
  std::vector<std::vector<Count>> f(L + 1, std::vector<Count>(n + 1, 0));
  for (std::size_t l = 1; l <= L; ++l) {
    f[l][1] = 1;
    for (std::size_t k = 2; k <= n; ++k) {
      if (l < 2 * k - 1) continue;
      f[l][k] = f[l - 1][k] + f[l - 2][k - 1];
    }
  }
  return f[L][n];
}

std::vector<std::string> enumerate_valid(int length, int parts) {
  if (length > kMaxEnumerationLength) {
    throw ResourceLimitError("exhaustive enumeration is limited to length " + std::to_string(kMaxEnumerationLength));
  }
  std::vector<std::string> words;
  if (length < 1 || parts < 1) return words;
  const std::uint32_t words_total = std::uint32_t{1} << length;
  const std::uint32_t last = std::uint32_t{1} << (length - 1);
  const int blanks = parts - 1;
  // Bit k set means cell k+1 holds a blank.
  for (std::uint32_t mask = 0; mask < words_total; ++mask) {
    if (std::popcount(mask) != blanks) continue;
    if ((mask & 1U) != 0 || (mask & last) != 0) continue;
    if ((mask & (mask >> 1)) != 0) continue;
    std::string w(static_cast<std::size_t>(length), '1');
    for (int k = 0; k < length; ++k) {
      if ((mask >> k) & 1U) w[static_cast<std::size_t>(k)] = '_';
    }
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  return words;
}

Count fib(int n) {
  if (n < 1) throw DomainError("fib is defined for n >= 1");
  require_countable(n);
  Count a = 1, b = 1;
  for (int i = 3; i <= n; ++i) {
    const Count c = a + b;
    a = b;
    b = c;
  }
  return b;
}

int max_parts(int length) { return (length + 1) / 2 + 1; }

bool check_fib_identity(int length) {
  if (length < 1) throw DomainError("length must be at least 1");
  Count sum = 0;
  for (int n = 1; n <= max_parts(length); ++n) sum += count_valid(length, n);
  return sum == fib(length);
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > std::numeric_limits<Count>::max()) throw ResourceLimitError("binomial coefficient overflows 64 bits");
  }
  return static_cast<Count>(acc);
}

ClosedFormCheck closed_form_printed(int length, int parts) {
  ClosedFormCheck out;
  out.value = binomial(std::int64_t{length} - parts + 1, std::int64_t{parts} - 1);
  out.matches = out.value == count_valid(length, parts);
  return out;
}

Count closed_form_corrected(int length, int parts) {
  if (length < 1 || parts < 1) return 0;
  return binomial(std::int64_t{length} - parts, std::int64_t{parts} - 1);
}

ArgmaxReport argmax_n(int length) {
  if (length < 1) throw DomainError("length must be at least 1");
  ArgmaxReport r;
  for (int n = 1; n <= max_parts(length); ++n) {
    const Count c = count_valid(length, n);
    if (c > r.count) {
      r.count = c;
      r.parts = n;
    }
  }
  const double L = length;
  r.threshold = (7.0 + 5.0 * L - std::sqrt(9.0 + 10.0 * L + 5.0 * L * L)) / 10.0;
  r.asymptote = (7.0 - std::sqrt(5.0)) / 10.0 + L / (std::numbers::phi + 2.0);
  return r;
}

double printed_ratio(int length, int parts) {
  const double L = length, n = parts;
  const double den = (L - 2 * n - 1) * (L - 2 * n);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n + 1) * (L - n) / den;
}

}  // namespace masa
