#include "masa/counting.hpp"
#include "masa/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

namespace {

// Brute force over every string in {1,_}^L written out character by
// character, independent of the library's bitmask scan.
std::vector<std::string> brute_force(int L, int n) {
  std::vector<std::string> out;
  std::string w(static_cast<std::size_t>(L), '1');
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      if (w.front() == '_' || w.back() == '_') return;
      if (w.find("__") != std::string::npos) return;
      if (static_cast<int>(std::count(w.begin(), w.end(), '_')) != n - 1) return;
      out.push_back(w);
      return;
    }
    for (char c : {'1', '_'}) {
      w[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

TEST(Counting, SmallValues) {
  EXPECT_EQ(masa::count_valid(3, 1), 1u);
  EXPECT_EQ(masa::count_valid(3, 2), 1u);
  EXPECT_EQ(masa::count_valid(3, 3), 0u);
  EXPECT_EQ(masa::count_valid(5, 3), 1u);
  EXPECT_EQ(masa::count_valid(5, 2), 3u);
  EXPECT_EQ(masa::count_valid(1, 1), 1u);
  EXPECT_EQ(masa::count_valid(2, 2), 0u);
  EXPECT_EQ(masa::enumerate_valid(5, 2), (std::vector<std::string>{"111_1", "11_11", "1_111"}));
}

TEST(Counting, RecursionAgreesWithBruteForce) {
  for (int L = 1; L <= 16; ++L) {
    for (int n = 1; n <= L + 1; ++n) {
      const auto want = brute_force(L, n);
      ASSERT_EQ(masa::count_valid(L, n), want.size()) << L << "," << n;
      ASSERT_EQ(masa::enumerate_valid(L, n), want) << L << "," << n;
    }
  }
}

TEST(Counting, FibonacciIdentity) {
  EXPECT_EQ(masa::fib(1), 1u);
  EXPECT_EQ(masa::fib(2), 1u);
  EXPECT_EQ(masa::fib(25), 75025u);
  EXPECT_EQ(masa::fib(92), 7540113804746346429ull);
  for (int L = 1; L <= 60; ++L) {
    EXPECT_TRUE(masa::check_fib_identity(L)) << L;
    masa::Count sum = 0;
    for (int n = 1; n <= masa::max_parts(L); ++n) sum += masa::count_valid(L, n);
    EXPECT_EQ(sum, masa::fib(L));
  }
}

TEST(Counting, PrintedClosedFormDisagreesAtThreeTwo) {
  const auto cf = masa::closed_form_printed(3, 2);
  EXPECT_EQ(cf.value, 2u);
  EXPECT_FALSE(cf.matches);
  EXPECT_TRUE(masa::closed_form_printed(3, 1).matches);
}

TEST(Counting, CorrectedClosedForm) {
  for (int L = 1; L <= 18; ++L)
    for (int n = 1; n <= masa::max_parts(L); ++n) EXPECT_EQ(masa::closed_form_corrected(L, n), brute_force(L, n).size());
}

TEST(Counting, Binomial) {
  EXPECT_EQ(masa::binomial(5, 2), 10u);
  EXPECT_EQ(masa::binomial(5, 0), 1u);
  EXPECT_EQ(masa::binomial(5, 6), 0u);
  EXPECT_EQ(masa::binomial(-1, 0), 0u);
  EXPECT_EQ(masa::binomial(62, 31), 465428353255261088ull);
}

TEST(Counting, Argmax) {
  for (int L = 1; L <= 40; ++L) {
    const auto r = masa::argmax_n(L);
    masa::Count best = 0;
    int best_n = 0;
    for (int n = 1; n <= masa::max_parts(L); ++n) {
      if (masa::count_valid(L, n) > best) {
        best = masa::count_valid(L, n);
        best_n = n;
      }
    }
    EXPECT_EQ(r.parts, best_n) << L;
    EXPECT_EQ(r.count, best);
    EXPECT_NEAR(r.threshold, (7 + 5.0 * L - std::sqrt(9 + 10.0 * L + 5.0 * L * L)) / 10, 1e-12);
  }
  EXPECT_NEAR(masa::argmax_n(0 + 1).asymptote - 1 / (((1 + std::sqrt(5.0)) / 2) + 2), 0.476393, 1e-6);
  EXPECT_TRUE(std::isnan(masa::printed_ratio(5, 2)));
}

TEST(Counting, Limits) {
  EXPECT_EQ(masa::count_valid(0, 1), 0u);
  EXPECT_EQ(masa::count_valid(5, 0), 0u);
  EXPECT_NO_THROW(masa::count_valid(92, 1));
  EXPECT_THROW(masa::count_valid(93, 1), masa::ResourceLimitError);
  EXPECT_THROW(masa::enumerate_valid(25, 2), masa::ResourceLimitError);
  EXPECT_THROW(masa::fib(0), masa::DomainError);
}

}  // namespace
