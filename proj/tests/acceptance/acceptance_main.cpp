// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails. Goldens here are typed in independently of the library's
// own suites.

#include "masa/encoding.hpp"
#include "masa/group_tower.hpp"
#include "masa/machine_io.hpp"
#include "masa/report.hpp"
#include "masa/suites.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock bounds, seconds.
constexpr double kTablesSeconds = 1;
constexpr double kTowerSeconds = 30;
constexpr double kCountingSeconds = 10;
constexpr double kEmbeddingSeconds = 60;
constexpr double kRepresentationSeconds = 10;
constexpr double kKalmarSeconds = 5;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = seconds <= 0 || elapsed < seconds;
  const bool ok = out.ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s; %.3fs", ok ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(), elapsed);
  if (seconds > 0) std::printf(" (limit %.0fs)", seconds);
  std::printf("\n");
  std::fflush(stdout);
}

std::string failed_names(const masa::Report& r) {
  std::string s;
  int shown = 0;
  for (const masa::Check& c : r.checks) {
    if (c.status != masa::CheckStatus::Fail) continue;
    if (shown++ < 5) s += " [" + c.name + " measured=" + c.measured + " " + c.detail + "]";
  }
  return s;
}

Outcome from_report(const masa::Report& r) {
  std::ostringstream d;
  d << r.count(masa::CheckStatus::Pass) << " passed, " << r.count(masa::CheckStatus::Fail) << " failed, "
    << r.count(masa::CheckStatus::Info) << " info, " << r.count(masa::CheckStatus::Skipped) << " skipped";
  return {r.passed() && r.count(masa::CheckStatus::Pass) > 0, d.str() + failed_names(r)};
}

std::string csv(const masa::GroupTable& g) {
  std::string s;
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) s += (c ? "," : "") + std::to_string(g(r, c));
    s += "\n";
  }
  return s;
}

Outcome printed_tables() {
  const std::string g1 = "0,1\n1,0\n";
  const std::string g2 = "0,1,2,3\n1,0,3,2\n2,3,1,0\n3,2,0,1\n";
  const std::string g3 =
      "0,1,2,3,4,5,6,7\n1,0,3,2,5,4,7,6\n2,3,1,0,6,7,5,4\n3,2,0,1,7,6,4,5\n"
      "4,5,6,7,2,3,1,0\n5,4,7,6,3,2,0,1\n6,7,5,4,1,0,3,2\n7,6,4,5,0,1,2,3\n";
  const std::string o3 =
      "0,4,2,6,1,5,3,7\n1,5,3,7,0,4,2,6\n2,6,1,5,3,7,0,4\n3,7,0,4,2,6,1,5\n"
      "4,2,6,1,5,3,7,0\n5,3,7,0,4,2,6,1\n6,1,5,3,7,0,4,2\n7,0,4,2,6,1,5,3\n";
  const std::vector<std::string> mus = {"1,0", "2,3,1,0", "4,5,6,7,2,3,1,0"};

  std::string bad;
  if (csv(masa::group_table(1)) != g1) bad += " G_1";
  if (csv(masa::group_table(2)) != g2) bad += " G_2";
  if (csv(masa::group_table(3)) != g3) bad += " G_3";
  std::string orbits;
  for (masa::Element x = 0; x < 8; ++x) {
    const masa::ElementRow o = masa::orbit(3, x);
    for (Eigen::Index t = 0; t < o.size(); ++t) orbits += (t ? "," : "") + std::to_string(o(t));
    orbits += "\n";
  }
  if (orbits != o3) bad += " O_3";
  for (int i = 1; i <= 3; ++i) {
    const masa::ElementRow mu = masa::generator(i);
    std::string s;
    for (Eigen::Index t = 0; t < mu.size(); ++t) s += (t ? "," : "") + std::to_string(mu(t));
    if (s != mus[static_cast<std::size_t>(i - 1)]) bad += " mu_" + std::to_string(i);
  }
  return {bad.empty(), bad.empty() ? "G_1..G_3, O_3, mu_1..mu_3 exact" : "mismatch:" + bad};
}

}  // namespace

int main() {
  const std::filesystem::path machines = MASA_MACHINES_DIR;
  const masa::Machine succ = masa::load_machine(machines / "succ.json");
  const masa::Machine add = masa::load_machine(machines / "add.json");

  criterion(1, "printed tables", kTablesSeconds, printed_tables);

  criterion(2, "tower invariants i<=8", kTowerSeconds, [] {
    masa::TowerSuiteOptions opt;
    opt.max_level = 8;
    opt.exhaustive_associativity_level = 5;
    opt.sampled_triples = 100000;
    return from_report(masa::tower_suite(opt));
  });

  criterion(3, "counting oracle", kCountingSeconds, [] {
    masa::CountingSuiteOptions opt;
    opt.max_oracle_length = 18;
    opt.max_fib_length = 25;
    return from_report(masa::counting_suite(opt));
  });

  criterion(4, "embedding suite succ, add L<=6", kEmbeddingSeconds, [&] {
    masa::Report r;
    r.append(masa::embedding_suite(succ, 6), "succ ");
    r.append(masa::embedding_suite(add, 6), "add ");
    return from_report(r);
  });

  criterion(5, "representation i<=5", kRepresentationSeconds, [] {
    masa::RepresentationSuiteOptions opt;
    opt.max_level = 5;
    opt.trials = 100;
    return from_report(masa::representation_suite(opt));
  });

  criterion(6, "iterated-exponential sizing m=2, L<=6", kKalmarSeconds, [&] {
    masa::Report r;
    r.append(masa::kalmar_bound_check(succ, 2, 6), "succ ");
    r.append(masa::kalmar_bound_check(add, 2, 6), "add ");
    return from_report(r);
  });

  criterion(7, "verify-all determinism", 0, [&] {
    masa::VerifyAllOptions opt;
    opt.machines_dir = machines;
    std::ostringstream first, second;
    masa::render_summary(first, masa::verify_all(opt));
    masa::render_summary(second, masa::verify_all(opt));
    const bool same = first.str() == second.str();
    return Outcome{same, std::to_string(first.str().size()) + " bytes, " + (same ? "identical" : "different")};
  });

  std::printf("acceptance: %s (%d failed)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
