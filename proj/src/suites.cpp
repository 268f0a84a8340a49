#include "masa/suites.hpp"

#include "masa/counting.hpp"
#include "masa/encoding.hpp"
#include "masa/error.hpp"
#include "masa/group_tower.hpp"
#include "masa/group_vector.hpp"
#include "masa/machine_io.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

namespace masa {

namespace {

std::string lvl(int i) { return "i=" + std::to_string(i); }

GroupTable table_from(std::initializer_list<std::initializer_list<int>> rows) {
  GroupTable t(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) t(r, c++) = static_cast<std::uint16_t>(v);
    ++r;
  }
  return t;
}

bool is_permutation_row(const auto& row, std::uint64_t n) {
  std::vector<bool> seen(n, false);
  for (Eigen::Index k = 0; k < row.size(); ++k) {
    const auto v = static_cast<std::uint64_t>(row(k));
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void golden_checks(Report& r) {
  const GroupTable g1 = table_from({{0, 1}, {1, 0}});
  const GroupTable g2 = table_from({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}});
  const GroupTable g3 = table_from({{0, 1, 2, 3, 4, 5, 6, 7},
                                    {1, 0, 3, 2, 5, 4, 7, 6},
                                    {2, 3, 1, 0, 6, 7, 5, 4},
                                    {3, 2, 0, 1, 7, 6, 4, 5},
                                    {4, 5, 6, 7, 2, 3, 1, 0},
                                    {5, 4, 7, 6, 3, 2, 0, 1},
                                    {6, 7, 5, 4, 1, 0, 3, 2},
                                    {7, 6, 4, 5, 0, 1, 2, 3}});
  r.add("golden G_1", group_table(1) == g1, "", "exact");
  r.add("golden G_2", group_table(2) == g2, "", "exact");
  r.add("golden G_3", group_table(3) == g3, "", "exact");

  const int orbit_rows[8][8] = {{0, 4, 2, 6, 1, 5, 3, 7}, {1, 5, 3, 7, 0, 4, 2, 6}, {2, 6, 1, 5, 3, 7, 0, 4},
                                {3, 7, 0, 4, 2, 6, 1, 5}, {4, 2, 6, 1, 5, 3, 7, 0}, {5, 3, 7, 0, 4, 2, 6, 1},
                                {6, 1, 5, 3, 7, 0, 4, 2}, {7, 0, 4, 2, 6, 1, 5, 3}};
  bool orbits_ok = true;
  for (Element x = 0; x < 8; ++x) {
    const ElementRow o = orbit(3, x);
    for (int t = 0; t < 8; ++t) orbits_ok = orbits_ok && o(t) == static_cast<Element>(orbit_rows[x][t]);
  }
  r.add("golden O_3(x), x=0..7", orbits_ok, "", "exact");

  const std::vector<std::vector<Element>> mus = {{1, 0}, {2, 3, 1, 0}, {4, 5, 6, 7, 2, 3, 1, 0}};
  for (int i = 1; i <= 3; ++i) {
    const ElementRow mu = generator(i);
    const auto& want = mus[static_cast<std::size_t>(i - 1)];
    r.add("golden mu_" + std::to_string(i),
          std::equal(want.begin(), want.end(), mu.data(), mu.data() + mu.size()) &&
              static_cast<std::size_t>(mu.size()) == want.size(),
          "", "exact");
  }
}

}  // namespace

Report tower_suite(const TowerSuiteOptions& opt) {
  Report r;
  r.title = "group tower up to level " + std::to_string(opt.max_level);
  if (opt.max_level >= 3) golden_checks(r);

  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i <= opt.max_level; ++i) {
    const GroupTable& g = cached_table(i);
    const std::uint64_t n = group_order(i);

    bool latin = true;
    for (Eigen::Index k = 0; k < g.rows(); ++k) {
      latin = latin && is_permutation_row(g.row(k), n) && is_permutation_row(g.col(k), n);
    }
    r.add("latin square " + lvl(i), latin, "", "exact");
    r.add("symmetric " + lvl(i), g == g.transpose(), "", "exact");

    bool identity = true;
    for (Eigen::Index k = 0; k < g.rows(); ++k) {
      identity = identity && g(0, k) == k && g(k, 0) == k;
    }
    r.add("identity element 0 " + lvl(i), identity, "", "exact");

    const TwistMatrix t = twist(i);
    bool twist_perm = true;
    for (Eigen::Index k = 0; k < t.rows(); ++k) {
      twist_perm = twist_perm && t.row(k).cast<int>().sum() == 1 && t.col(k).cast<int>().sum() == 1;
    }
    r.add("twist is a permutation matrix " + lvl(i), twist_perm, "", "exact");

    if (i < opt.max_level) {
      r.add("nesting " + lvl(i), cached_table(i + 1).topLeftCorner(g.rows(), g.cols()) == g, "", "exact");
    }

    if (i >= 1) {
      const ElementRow o = orbit(i, 0);
      std::vector<Element> sorted(o.data(), o.data() + o.size());
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      r.add("generator order " + lvl(i), sorted.size() == n, std::to_string(sorted.size()) + " distinct", "exact");

      const ElementRow mu = generator(i);
      const auto row = g.row(static_cast<Eigen::Index>(generator_element(i))).cast<Element>();
      r.add("generator row agreement " + lvl(i), mu == row.transpose(), "", "exact");

      if (i < opt.max_level) {
        const ElementRow next = concat(shifted_identity_sequence(n, static_cast<Element>(n)), mu);
        r.add("generator recurrence " + lvl(i) + "->" + std::to_string(i + 1), next == generator(i + 1), "", "exact");
      }
    }

    if (i <= opt.exhaustive_associativity_level) {
      std::uint64_t violations = 0;
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
          const auto ab = g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
          for (std::uint64_t c = 0; c < n; ++c) {
            const auto bc = g(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c));
            if (g(static_cast<Eigen::Index>(a), bc) != g(ab, static_cast<Eigen::Index>(c))) ++violations;
          }
        }
      }
      r.add("associativity exhaustive " + lvl(i), violations == 0,
            std::to_string(n * n * n) + " triples, " + std::to_string(violations) + " violations", "exact");
    } else {
      std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
      std::uint64_t violations = 0;
      for (std::uint64_t s = 0; s < opt.sampled_triples; ++s) {
        const auto a = static_cast<Eigen::Index>(pick(rng));
        const auto b = static_cast<Eigen::Index>(pick(rng));
        const auto c = static_cast<Eigen::Index>(pick(rng));
        if (g(a, g(b, c)) != g(g(a, b), c)) ++violations;
      }
      r.add("associativity sampled " + lvl(i), violations == 0,
            std::to_string(opt.sampled_triples) + " triples, " + std::to_string(violations) + " violations", "exact");
    }
  }
  return r;
}

Report counting_suite(const CountingSuiteOptions& opt) {
  Report r;
  r.title = "initial tape counting";
  for (int L = 1; L <= opt.max_oracle_length; ++L) {
    std::string mismatches;
    bool support_rule = true;
    for (int n = 1; n <= max_parts(L); ++n) {
      const Count counted = count_valid(L, n);
      const auto listed = enumerate_valid(L, n).size();
      if (counted != listed) {
        mismatches += " n=" + std::to_string(n) + ":" + std::to_string(counted) + "!=" + std::to_string(listed);
      }
      const bool zero_expected = n >= 2 && L < 2 * n - 1;
      support_rule = support_rule && ((listed == 0) == zero_expected);
    }
    r.add("recursion = enumeration L=" + std::to_string(L), mismatches.empty(), "n=1.." + std::to_string(max_parts(L)),
          "exact", mismatches);
    r.add("zero pattern L=" + std::to_string(L), support_rule, "", "exact");
  }
  for (int L = 1; L <= opt.max_fib_length; ++L) {
    r.add("Fibonacci identity L=" + std::to_string(L), check_fib_identity(L), "Fib=" + std::to_string(fib(L)), "exact");
  }

  const ClosedFormCheck cf = closed_form_printed(3, 2);
  r.add("printed closed form discrepancy at (3,2) detected", !cf.matches && cf.value == 2 && count_valid(3, 2) == 1,
        "count=" + std::to_string(count_valid(3, 2)) + " formula=" + std::to_string(cf.value), "exact");
  int printed_mismatches = 0, printed_total = 0;
  bool corrected_ok = true;
  for (int L = 1; L <= opt.max_oracle_length; ++L) {
    for (int n = 1; n <= max_parts(L); ++n) {
      ++printed_total;
      if (!closed_form_printed(L, n).matches) ++printed_mismatches;
      corrected_ok = corrected_ok && closed_form_corrected(L, n) == enumerate_valid(L, n).size();
    }
  }
  r.info("printed closed form", "mismatches=" + std::to_string(printed_mismatches) + "/" + std::to_string(printed_total));
  r.add("binom(L-n, n-1) = enumeration", corrected_ok, "L<=" + std::to_string(opt.max_oracle_length), "exact");

  const ArgmaxReport am = argmax_n(20);
  r.info("argmax L=20", "n=" + std::to_string(am.parts) + " f=" + std::to_string(am.count),
         "printed threshold " + format_real(am.threshold) + ", asymptote " + format_real(am.asymptote));
  return r;
}

Report representation_suite(const RepresentationSuiteOptions& opt) {
  Report r;
  r.title = "left regular representation up to level " + std::to_string(opt.max_level);
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto random_vector = [&](int level) {
    const std::uint64_t n = group_order(level);
    std::uniform_int_distribution<std::uint64_t> size_pick(1, std::min<std::uint64_t>(n, 6));
    std::uniform_int_distribution<Element> elem(0, static_cast<Element>(n - 1));
    GroupVectorXcd v(level);
    const auto terms = size_pick(rng);
    for (std::uint64_t k = 0; k < terms; ++k) v.add(elem(rng), {gauss(rng), gauss(rng)});
    return v;
  };

  for (int i = 1; i <= opt.max_level; ++i) {
    const std::uint64_t n = group_order(i);
    std::uniform_int_distribution<Element> elem(0, static_cast<Element>(n - 1));
    double norm_dev = 0, inner_dev = 0, hom_dev = 0, conv_excess = -INFINITY, power_dev = 0;
    bool hom_support = true, power_support = true;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const GroupVectorXcd v = random_vector(i);
      const GroupVectorXcd w = random_vector(i);
      const Element g = elem(rng), h = elem(rng);

      const GroupVectorXcd gv = left_translate(i, g, v);
      norm_dev = std::max(norm_dev, std::abs(norm(gv) - norm(v)));
      inner_dev = std::max(inner_dev, std::abs(inner(gv, left_translate(i, g, w)) - inner(v, w)));

      const GroupVectorXcd twice = left_translate(i, g, left_translate(i, h, v));
      const GroupVectorXcd once = left_translate(i, multiply(i, g, h), v);
      hom_support = hom_support && support(twice) == support(once);
      hom_dev = std::max(hom_dev, compare(twice, once).max_difference);

      const GroupVectorXcd conv = convolve(i, v, w);
      const double bound = norm(v) * norm(w);
      conv.for_each([&](Element, const std::complex<double>& z) { conv_excess = std::max(conv_excess, std::abs(z) - bound); });

      std::uniform_int_distribution<std::uint64_t> kpick(0, n);
      const std::uint64_t k = kpick(rng);
      GroupVectorXcd stepped = v;
      for (std::uint64_t s = 0; s < k; ++s) stepped = left_translate(i, generator_element(i), stepped);
      const GroupVectorXcd fast = generator_power(i, k, v);
      power_support = power_support && support(stepped) == support(fast);
      power_dev = std::max(power_dev, compare(stepped, fast).max_difference);
    }
    const std::string tol = format_real(kAmplitudeTolerance);
    r.add("unitarity norm " + lvl(i), norm_dev <= kAmplitudeTolerance, format_real(norm_dev), tol);
    r.add("unitarity inner product " + lvl(i), inner_dev <= kAmplitudeTolerance, format_real(inner_dev), tol);
    r.add("homomorphism " + lvl(i), hom_support && hom_dev <= kAmplitudeTolerance, format_real(hom_dev), tol,
          hom_support ? "" : "support mismatch");
    r.add("convolution bound " + lvl(i), conv_excess <= kAmplitudeTolerance, "max excess " + format_real(conv_excess),
          tol);
    r.add("generator_power vs repeated translation " + lvl(i), power_support && power_dev <= kAmplitudeTolerance,
          format_real(power_dev), tol, power_support ? "" : "support mismatch");
  }
  return r;
}

Report embedding_suite(const Machine& m, int max_length) {
  Report r;
  r.title = "embedding of machine " + m.name() + " for L <= " + std::to_string(max_length);
  r.notes.push_back("h_x counts transitions (|S(x)| - 1); h = max h_x; k_x = h - h_x");
  r.notes.push_back("operators act on the finite truncation l^2(G_N); no embedding into the factor is applied");
  for (int L = 1; L <= max_length; ++L) {
    const auto by_output = trees_for_length(m, L);
    if (by_output.empty()) {
      r.skip("L=" + std::to_string(L), "no nonempty trees");
      continue;
    }
    std::vector<VirtualTree> trees;
    for (const auto& [y, tree] : by_output) trees.push_back(tree);
    for (const VirtualTree& tree : trees) {
      const BasisAssignment basis = assign_basis(tree);
      const std::string prefix = "y=" + std::to_string(tree.output()) + " L=" + std::to_string(L) + " ";
      auto take = [&](const Report& sub, const std::string& tag) {
        for (Check c : sub.checks) {
          c.name = prefix + tag + " " + c.name;
          r.checks.push_back(std::move(c));
        }
      };
      take(verify_embedding_invariants(tree, basis), "invariants");
      take(verify_step_commutation(tree, basis), "step");
      take(verify_support_equality(tree, basis), "supports");
      take(verify_coefficients(tree, basis), "coefficients");
      for (const Branch& b : tree.branches()) take(verify_transitions(m, b.input, tree, basis), "transitions");
    }
    const auto shared = assign_shared_basis(trees);
    r.append(verify_final_injectivity(trees, shared), "injectivity ");
  }
  if (m.kalmar_m) {
    const Report k = kalmar_bound_check(m, *m.kalmar_m, max_length);
    for (Check c : k.checks) {
      c.name = "kalmar m=" + std::to_string(*m.kalmar_m) + " " + c.name;
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

namespace {

std::optional<std::function<std::uint64_t(const InputVector&)>> documented_function(const Machine& m) {
  if (!m.function) return std::nullopt;
  const std::string& f = *m.function;
  if (f == "x1 + 1") return [](const InputVector& x) { return x[0] + 1; };
  if (f == "x1 + x2") return [](const InputVector& x) { return x[0] + x[1]; };
  if (f == "0") return [](const InputVector&) { return std::uint64_t{0}; };
  if (f == "x1") return [](const InputVector& x) { return x[0]; };
  return std::nullopt;
}

void for_each_input(int arity, int max_length, const std::function<void(const InputVector&)>& f) {
  InputVector x(static_cast<std::size_t>(arity), 0);
  const int budget = max_length - (2 * arity - 1);
  if (budget < 0) return;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == x.size()) {
      f(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[i] = static_cast<std::uint64_t>(v);
      rec(i + 1, left - v);
    }
  };
  rec(0, budget);
}

}  // namespace

Report machine_function_suite(const Machine& m, int max_length) {
  Report r;
  r.title = "function of machine " + m.name();
  const auto expected = documented_function(m);
  if (!m.arity || !expected) {
    r.skip(m.name(), "no documented arithmetic function");
    return r;
  }
  std::uint64_t inputs = 0;
  std::string failures;
  for_each_input(*m.arity, max_length, [&](const InputVector& x) {
    ++inputs;
    const Computation comp = run(m, x, default_max_steps(input_length(x)));
    const bool ok = comp.halted() && is_final(comp.last()) && decode_output(comp.last().tape) == (*expected)(x);
    if (!ok && failures.size() < 200) failures += " (" + to_string(x) + ")";
  });
  r.add(m.name() + " computes " + *m.function, failures.empty(),
        std::to_string(inputs) + " inputs with length <= " + std::to_string(max_length), "exact",
        failures.empty() ? "" : "wrong on" + failures);
  return r;
}

Report verify_all(const VerifyAllOptions& opt) {
  Report r;
  r.title = "verify-all max-level=" + std::to_string(opt.max_level) + " max-L=" + std::to_string(opt.max_length) +
            " embed-L=" + std::to_string(opt.max_embed_length);

  TowerSuiteOptions tower;
  tower.max_level = opt.max_level;
  r.append(tower_suite(tower), "tower: ");

  CountingSuiteOptions counting;
  counting.max_oracle_length = std::min(opt.max_length, kMaxEnumerationLength);
  counting.max_fib_length = std::max(opt.max_length, 1);
  r.append(counting_suite(counting), "counting: ");

  RepresentationSuiteOptions rep;
  rep.max_level = std::min(opt.max_level, 5);
  r.append(representation_suite(rep), "representation: ");

  for (const Machine& m : load_machine_library(opt.machines_dir)) {
    r.notes.push_back("machine " + m.name() + " digest " + machine_digest(m));
    r.append(machine_function_suite(m, 10), "machine " + m.name() + ": ");
    r.append(embedding_suite(m, opt.max_embed_length), "embedding " + m.name() + ": ");
  }
  return r;
}

}  // namespace masa
