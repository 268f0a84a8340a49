#include "masa/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace {

TEST(Report, StatusAndCounts) {
  masa::Report r;
  r.title = "t";
  r.add("a", true, "1", "exact");
  r.info("b", "x");
  r.skip("c", "nothing to do");
  EXPECT_TRUE(r.passed());
  r.add("d", false, "2", "exact", "off by one");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.count(masa::CheckStatus::Pass), 1u);
  EXPECT_EQ(r.count(masa::CheckStatus::Fail), 1u);
  EXPECT_EQ(r.count(masa::CheckStatus::Info), 1u);
  EXPECT_EQ(r.count(masa::CheckStatus::Skipped), 1u);
}

TEST(Report, AppendPrefixesNames) {
  masa::Report inner;
  inner.add("x", true, "", "exact");
  masa::Report outer;
  outer.append(inner, "p: ");
  ASSERT_EQ(outer.checks.size(), 1u);
  EXPECT_EQ(outer.checks[0].name, "p: x");
}

TEST(Report, RealFormatting) {
  EXPECT_EQ(masa::format_real(0.1 + 0.2), "0.3");
  EXPECT_EQ(masa::format_real(1e-13), "1e-13");
  EXPECT_EQ(masa::format_real(std::sqrt(2.0)), "1.41421356237");
}

TEST(Report, RenderingIsStable) {
  masa::Report r;
  r.title = "demo";
  r.notes.push_back("note");
  r.add("ok", true, "0", "1e-12");
  r.add("bad", false, "3", "exact", "detail");
  std::ostringstream a, b;
  masa::render(a, r);
  masa::render(b, r);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("== demo =="), std::string::npos);
  EXPECT_NE(a.str().find("[FAIL] bad"), std::string::npos);
  EXPECT_NE(a.str().find("result: FAIL"), std::string::npos);

  std::ostringstream s;
  masa::render_summary(s, r);
  EXPECT_EQ(s.str().find("[PASS] ok"), std::string::npos);
  EXPECT_NE(s.str().find("[FAIL] bad"), std::string::npos);
}

}  // namespace
