#include "masa/report.hpp"

#include <algorithm>
#include <cstdio>

namespace masa {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "INFO";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

void Report::add(std::string name, bool ok, std::string measured, std::string tolerance, std::string detail) {
  checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(measured),
                    std::move(tolerance), std::move(detail)});
}

void Report::info(std::string name, std::string measured, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::Info, std::move(measured), "", std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::Skipped, "", "", std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& n : other.notes) notes.push_back(prefix + n);
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

void render_check(std::ostream& out, const Check& c) {
  out << '[' << to_string(c.status) << "] " << c.name;
  if (!c.measured.empty()) out << " measured=" << c.measured;
  if (!c.tolerance.empty()) out << " tol=" << c.tolerance;
  if (!c.detail.empty()) out << " (" << c.detail << ')';
  out << '\n';
}

void render_header(std::ostream& out, const Report& r) {
  if (!r.title.empty()) out << "== " << r.title << " ==\n";
  for (const auto& n : r.notes) out << "# " << n << '\n';
}

void render_totals(std::ostream& out, const Report& r) {
  out << "checks: " << r.checks.size() << " pass: " << r.count(CheckStatus::Pass)
      << " fail: " << r.count(CheckStatus::Fail) << " info: " << r.count(CheckStatus::Info)
      << " skip: " << r.count(CheckStatus::Skipped) << '\n';
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

void render(std::ostream& out, const Report& r) {
  render_header(out, r);
  for (const auto& c : r.checks) render_check(out, c);
  render_totals(out, r);
}

void render_summary(std::ostream& out, const Report& r) {
  render_header(out, r);
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Fail || c.status == CheckStatus::Info) render_check(out, c);
  }
  render_totals(out, r);
}

}  // namespace masa
