// masa: command-line front end for the group tower, machine simulation,
// tape counting and the embedding verifiers.
//
// Exit codes: 0 success, 1 verification failure or step budget exhausted,
// 2 usage, domain, resource or load error, 3 machine fault.

#include "masa/counting.hpp"
#include "masa/encoding.hpp"
#include "masa/error.hpp"
#include "masa/group_tower.hpp"
#include "masa/machine.hpp"
#include "masa/machine_io.hpp"
#include "masa/report.hpp"
#include "masa/suites.hpp"
#include "masa/table_io.hpp"
#include "masa/tree_dump.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFault = 3;

constexpr int kMaxCsvLevel = 12;
constexpr int kMaxPgmLevel = 10;

masa::InputVector parse_input(const std::string& text) {
  masa::InputVector x;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw masa::UsageError("--input: expected comma-separated nonnegative integers, got '" + text + "'");
    }
    x.push_back(std::stoull(part));
  }
  if (x.empty()) throw masa::UsageError("--input: empty input vector");
  return x;
}

void write_output(const std::string& path, bool binary, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw masa::UsageError("cannot open '" + path + "' for writing");
  body(out);
}

struct TableArgs {
  int level = 1;
  std::string format = "csv";
  bool twist = false;
  std::string output;
};

int cmd_table(const TableArgs& a) {
  if (a.format != "csv" && a.format != "pgm") throw masa::UsageError("unknown format '" + a.format + "'");
  const int limit = a.format == "csv" ? kMaxCsvLevel : kMaxPgmLevel;
  if (a.level < 0 || a.level > limit) {
    throw masa::ResourceLimitError("--level " + std::to_string(a.level) + " outside [0, " + std::to_string(limit) +
                                   "] for " + a.format);
  }
  if (a.twist) {
    const masa::TwistMatrix t = masa::twist(a.level);
    write_output(a.output, a.format == "pgm", [&](std::ostream& out) {
      if (a.format == "csv") {
        masa::write_csv(out, t);
        out << '\n';
      } else {
        masa::write_pgm(out, t, 1);
      }
    });
  } else {
    const masa::GroupTable& g = masa::cached_table(a.level);
    write_output(a.output, a.format == "pgm", [&](std::ostream& out) {
      if (a.format == "csv") {
        masa::write_csv(out, g);
        out << '\n';
      } else {
        masa::write_pgm(out, g, masa::group_order(a.level) - 1);
      }
    });
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string machine;
  std::string input;
  std::uint64_t max_steps = 0;
  bool trace = false;
};

int cmd_simulate(const SimulateArgs& a) {
  const masa::Machine m = masa::load_machine(a.machine);
  const masa::InputVector x = parse_input(a.input);
  const std::uint64_t budget = a.max_steps ? a.max_steps : masa::default_max_steps(masa::input_length(x));

  const masa::Computation comp = masa::run(m, x, budget);
  std::cout << "machine: " << m.name() << " (" << masa::machine_digest(m) << ")\n";
  std::cout << "input: " << masa::to_string(x) << "\n";
  if (a.trace) {
    for (std::size_t k = 0; k < comp.configurations.size(); ++k) {
      std::cout << k << ": " << masa::to_string(m, comp.configurations[k]) << "\n";
    }
  }
  if (!comp.halted()) {
    std::cout << "budget exhausted: no halt within " << budget << " steps\n";
    return kExitFailed;
  }
  const masa::Configuration& last = comp.last();
  std::cout << "final tape: " << masa::to_string(last.tape) << "\n";
  std::cout << "steps: " << comp.transitions() << "\n";
  std::cout << "halt space: " << masa::halt_space(comp) << "\n";
  const auto y = masa::decode_output(last.tape);
  if (!masa::is_final(last)) {
    std::cerr << "warning: halted with head at cell " << last.head << ", not a final configuration\n";
  }
  if (y) {
    std::cout << "output: " << *y << "\n";
  } else {
    std::cerr << "warning: final tape is not a single run of ones\n";
    std::cout << "output: (raw) " << masa::to_string(last.tape) << "\n";
  }
  std::cout << "halted\n";
  return kExitOk;
}

struct CountArgs {
  int length = 0;
  int parts = 0;
  bool check_fib = false;
  bool argmax = false;
};

int cmd_count(const CountArgs& a) {
  if (a.length < 1) throw masa::UsageError("--length must be at least 1");
  std::cout << "L,n,count,paper_closed_form,match_flag\n";
  auto row = [&](int n) {
    const auto cf = masa::closed_form_printed(a.length, n);
    std::cout << a.length << ',' << n << ',' << masa::count_valid(a.length, n) << ',' << cf.value << ','
              << (cf.matches ? "match" : "mismatch") << "\n";
  };
  if (a.parts > 0) {
    row(a.parts);
  } else {
    for (int n = 1; 2 * n - 1 <= a.length; ++n) row(n);
  }
  if (a.check_fib) {
    const bool ok = masa::check_fib_identity(a.length);
    std::cout << "Fibonacci identity: " << (ok ? "holds" : "FAILS") << " (Fib(" << a.length
              << ") = " << masa::fib(a.length) << ")\n";
    if (!ok) return kExitFailed;
  }
  if (a.argmax) {
    const masa::ArgmaxReport r = masa::argmax_n(a.length);
    std::cout << "argmax n: " << r.parts << " (count " << r.count << ")\n";
    std::cout << "printed threshold: " << masa::format_real(r.threshold) << "\n";
    std::cout << "printed asymptote: " << masa::format_real(r.asymptote) << "\n";
    std::cout << "printed ratio at n=" << r.parts << ": " << masa::format_real(masa::printed_ratio(a.length, r.parts))
              << "\n";
  }
  return kExitOk;
}

struct EmbedArgs {
  std::string machine;
  std::uint64_t y = 0;
  int length = 0;
  bool verify = false;
  std::string dump;
};

int cmd_embed(const EmbedArgs& a) {
  const masa::Machine m = masa::load_machine(a.machine);
  const masa::VirtualTree tree = masa::build_virtual_tree(m, a.y, a.length);
  const masa::BasisAssignment basis = masa::assign_basis(tree);

  std::cout << "machine: " << m.name() << " (" << masa::machine_digest(m) << ")\n";
  std::cout << "y=" << a.y << " L=" << a.length << ": " << tree.branch_count() << " branches, h=" << tree.height()
            << ", N=" << basis.level() << "\n";
  for (const masa::Branch& b : tree.branches()) {
    std::cout << "  (" << masa::to_string(b.input) << ") h_x=" << b.transitions << " k_x=" << b.padding << "\n";
  }

  std::vector<masa::Report> reports;
  if (a.verify) {
    reports.push_back(masa::verify_embedding_invariants(tree, basis));
    reports.push_back(masa::verify_step_commutation(tree, basis));
    reports.push_back(masa::verify_support_equality(tree, basis));
    reports.push_back(masa::verify_coefficients(tree, basis));
    for (const masa::Branch& b : tree.branches()) reports.push_back(masa::verify_transitions(m, b.input, tree, basis));
  }
  if (!a.dump.empty()) {
    write_output(a.dump, false, [&](std::ostream& out) { out << masa::tree_dump(tree, basis, reports); });
  }
  if (!a.verify) return kExitOk;

  masa::Report all;
  all.title = "embedding checks";
  for (const masa::Report& r : reports) {
    for (const std::string& note : r.notes) {
      if (std::find(all.notes.begin(), all.notes.end(), note) == all.notes.end()) all.notes.push_back(note);
    }
    for (masa::Check check : r.checks) {
      check.name = r.title + ": " + check.name;
      all.checks.push_back(std::move(check));
    }
  }
  masa::render(std::cout, all);
  return all.passed() ? kExitOk : kExitFailed;
}

int cmd_verify_all(const masa::VerifyAllOptions& opt) {
  const masa::Report r = masa::verify_all(opt);
  masa::render_summary(std::cout, r);
  return r.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic 2-group tower, unary machines and their group-algebra embedding"};
  app.require_subcommand(1);

  TableArgs table;
  auto* t = app.add_subcommand("table", "Emit a group table or twist matrix");
  t->add_option("--level", table.level, "Tower level i (order 2^i)")->required();
  t->add_option("--format", table.format, "csv or pgm");
  t->add_flag("--twist", table.twist, "Emit the twist matrix T(i) instead");
  t->add_option("--output,-o", table.output, "Output file (default stdout)");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run a machine on an input vector");
  s->add_option("machine", sim.machine, "Machine JSON file")->required();
  s->add_option("--input", sim.input, "Comma-separated integers, e.g. 1,1")->required();
  s->add_option("--max-steps", sim.max_steps, "Transition budget (default 10*2^L)");
  s->add_flag("--trace", sim.trace, "Print every configuration");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count valid initial tapes");
  c->add_option("--length", count.length, "Tape length L")->required();
  c->add_option("--parts", count.parts, "Only this part count n");
  c->add_flag("--check-fib", count.check_fib, "Check the Fibonacci sum identity");
  c->add_flag("--argmax", count.argmax, "Report the maximizing n");

  EmbedArgs embed;
  auto* e = app.add_subcommand("embed", "Build a virtual tree and its embedding");
  e->add_option("machine", embed.machine, "Machine JSON file")->required();
  e->add_option("--y", embed.y, "Output value")->required();
  e->add_option("--length", embed.length, "Input length L")->required();
  e->add_flag("--verify", embed.verify, "Run every verifier");
  e->add_option("--dump", embed.dump, "Write the JSON tree dump to this path");

  masa::VerifyAllOptions all;
  all.machines_dir = MASA_MACHINES_DIR;
  std::string machines_dir = all.machines_dir.string();
  auto* v = app.add_subcommand("verify-all", "Run every suite");
  v->add_option("--max-level", all.max_level, "Highest tower level");
  v->add_option("--max-length", all.max_length, "Highest counting length");
  v->add_option("--embed-max-length", all.max_embed_length, "Highest length for machine trees");
  v->add_option("--machines-dir", machines_dir, "Directory of machine files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*t) return cmd_table(table);
    if (*s) return cmd_simulate(sim);
    if (*c) return cmd_count(count);
    if (*e) return cmd_embed(embed);
    if (*v) {
      all.machines_dir = machines_dir;
      return cmd_verify_all(all);
    }
  } catch (const masa::MachineFault& err) {
    std::cerr << "machine fault: " << err.what() << "\n";
    return kExitFault;
  } catch (const masa::BudgetExceeded& err) {
    std::cerr << "budget exhausted: " << err.what() << "\n";
    return kExitFailed;
  } catch (const masa::LoadError& err) {
    std::cerr << "load error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const masa::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
