#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace masa {

enum class CheckStatus { Pass, Fail, Info, Skipped };

const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string measured;   // observed value(s), already formatted
  std::string tolerance;  // "exact" or a formatted bound
  std::string detail;
};

/// Ordered list of checks with free-form header notes. Rendering is
/// deterministic: fixed order, 12 significant digits for reals.
struct Report {
  std::string title;
  std::vector<std::string> notes;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t count(CheckStatus s) const;

  void add(std::string name, bool ok, std::string measured, std::string tolerance, std::string detail = {});
  void info(std::string name, std::string measured, std::string detail = {});
  void skip(std::string name, std::string detail);
  void append(const Report& other, const std::string& prefix = {});
};

/// 12 significant digits, shortest form.
std::string format_real(double v);

/// Full listing of every check.
void render(std::ostream& out, const Report& r);
/// Header, notes, failures, and per-status totals.
void render_summary(std::ostream& out, const Report& r);

}  // namespace masa
