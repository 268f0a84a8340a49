#include "masa/encoding.hpp"

#include "masa/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace masa {

namespace {

std::string pair_label(const VirtualTree& tree, BranchIndex a, BranchIndex b) {
  return "(" + to_string(tree.branch(a).input) + ") vs (" + to_string(tree.branch(b).input) + ")";
}

std::string input_label(const VirtualTree& tree, BranchIndex a) { return "(" + to_string(tree.branch(a).input) + ")"; }

std::string tol_string() { return format_real(kAmplitudeTolerance); }

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Report make_report(const std::string& title, const VirtualTree& tree, const BasisAssignment& basis) {
  Report r;
  r.title = title;
  r.notes = report_conventions(tree, basis);
  return r;
}

}  // namespace

Report verify_support_equality(const VirtualTree& tree, const BasisAssignment& basis) {
  Report r = make_report("support equality for inputs of equal computation length", tree, basis);
  const std::size_t n = tree.branch_count();
  bool any = false;
  for (BranchIndex x = 0; x < n; ++x) {
    for (BranchIndex xp = x + 1; xp < n; ++xp) {
      const int hx = tree.branch(x).transitions;
      if (hx != tree.branch(xp).transitions) continue;
      any = true;
      GroupVectorXcd vx = embed_input(tree, basis, x);
      GroupVectorXcd vxp = embed_input(tree, basis, xp);
      r.add("a " + pair_label(tree, x, xp), support(vx) == support(vxp), std::to_string(support(vx).size()) + " elements",
            "exact");
      for (int k = 0; k <= hx; ++k) {
        r.add("b " + pair_label(tree, x, xp) + " k=" + std::to_string(k), support(vx) == support(vxp), "", "exact");
        vx = step_operator(basis, vx);
        vxp = step_operator(basis, vxp);
      }
    }
  }
  if (!any) r.add("pairs with equal h_x", true, "0", "exact", "vacuous");
  return r;
}

Report verify_coefficients(const VirtualTree& tree, const BasisAssignment& basis) {
  Report r = make_report("unit norms and the sqrt(2) coefficient relation", tree, basis);
  r.notes.push_back("b compares mu^k([[x]]) with mu^e([[x']]) at e = k + (h_x' - h_x), the exponent that puts both at the "
                    "same level; the literal exponent k + (h_x - h_x') is reported as INFO");
  const std::size_t n = tree.branch_count();
  const double leaf_scale = 1.0 / std::sqrt(static_cast<double>(n) + 1.0);

  for (BranchIndex x = 0; x < n; ++x) {
    const int hx = tree.branch(x).transitions;
    double worst = 0;
    GroupVectorXcd v = embed_input(tree, basis, x);
    for (int k = 0; k <= hx; ++k) {
      worst = std::max(worst, std::abs(norm(v) - 1.0));
      v = step_operator(basis, v);
    }
    r.add("a " + input_label(tree, x) + " k=0.." + std::to_string(hx), worst <= kAmplitudeTolerance,
          "max|norm-1|=" + format_real(worst), tol_string());
  }

  if (n < 2) {
    r.add("b", true, "", "", "single branch, vacuous");
    return r;
  }

  for (BranchIndex x = 0; x < n; ++x) {
    const Branch& bx = tree.branch(x);
    const int hx = bx.transitions;
    std::vector<GroupVectorXcd> orbit_x;
    {
      GroupVectorXcd v = embed_input(tree, basis, x);
      for (int k = 0; k <= hx; ++k) {
        orbit_x.push_back(v);
        v = step_operator(basis, v);
      }
    }
    for (BranchIndex xp = 0; xp < n; ++xp) {
      if (xp == x) continue;
      const int hxp = tree.branch(xp).transitions;
      const GroupVectorXcd base_xp = embed_input(tree, basis, xp);
      double worst = 0;
      int compared = 0, skipped = 0;
      int literal_held = 0, literal_compared = 0, literal_skipped = 0;
      for (int k = 0; k <= hx; ++k) {
        // [(c, x)] with c = c_k, the k-th configuration of S(x).
        const Element e = basis.element(x, bx.padding + k);
        const GroupVectorXcd probe = GroupVectorXcd::delta(basis.level(), e);
        const std::complex<double> lhs = inner(orbit_x[static_cast<std::size_t>(k)], probe);
        worst = std::max(worst, std::abs(lhs - std::numbers::sqrt2 * leaf_scale));

        const int aligned = k + (hxp - hx);
        if (aligned < 0 || aligned > hxp) {
          ++skipped;
        } else {
          const auto rhs = inner(generator_power(basis.level(), static_cast<std::uint64_t>(aligned), base_xp), probe);
          worst = std::max(worst, std::abs(lhs - std::numbers::sqrt2 * rhs));
          ++compared;
        }

        const int literal = k + (hx - hxp);
        if (literal < 0 || literal > hxp) {
          ++literal_skipped;
        } else {
          const auto rhs = inner(generator_power(basis.level(), static_cast<std::uint64_t>(literal), base_xp), probe);
          ++literal_compared;
          if (std::abs(lhs - std::numbers::sqrt2 * rhs) <= kAmplitudeTolerance) ++literal_held;
        }
      }
      r.add("b " + pair_label(tree, x, xp), worst <= kAmplitudeTolerance,
            "max dev=" + format_real(worst) + " compared=" + std::to_string(compared) +
                " skipped=" + std::to_string(skipped),
            tol_string());
      r.info("b literal exponent " + pair_label(tree, x, xp),
             "held=" + std::to_string(literal_held) + "/" + std::to_string(literal_compared) +
                 " out_of_range=" + std::to_string(literal_skipped),
             hx == hxp ? "h_x = h_x', identical to the aligned form" : "h_x != h_x'");
    }
  }
  return r;
}

Report verify_transitions(const Machine& m, const InputVector& input, const VirtualTree& tree,
                       const BasisAssignment& basis) {
  Report r = make_report("transition commutation and final support", tree, basis);
  r.notes.push_back("the iteration count used for b is h_x (transitions); reading it as |S(x)| configurations is "
                    "reported as INFO");
  const BranchIndex x = tree.branch_of(input);
  const Branch& b = tree.branch(x);
  const int hx = b.transitions;
  const auto& configs = b.computation.configurations;
  const std::string label = input_label(tree, x);

  std::vector<int> bad_transitions, bad_supports;
  double worst = 0;
  for (int i = 0; i < hx; ++i) {
    const Configuration next = step(m, configs[static_cast<std::size_t>(i)]);
    if (next != configs[static_cast<std::size_t>(i) + 1]) bad_transitions.push_back(i);
    const NodeId here = tree.node_at(x, hx - i);
    const NodeId there = tree.node_at(x, hx - i - 1);
    const VectorComparison cmp =
        compare(step_operator(basis, embed_config(tree, basis, here, x)), embed_config(tree, basis, there, x));
    if (!cmp.same_support) bad_supports.push_back(i);
    worst = std::max(worst, cmp.max_difference);
  }
  r.add("a transition " + label, bad_transitions.empty(), std::to_string(hx) + " steps", "exact",
        bad_transitions.empty() ? "" : "mismatch at steps " + join_ints(bad_transitions));
  r.add("a operator " + label, bad_supports.empty() && worst <= kAmplitudeTolerance,
        "max dev=" + format_real(worst) + " support mismatches=" + std::to_string(bad_supports.size()), tol_string(),
        bad_supports.empty() ? "" : "support mismatch at steps " + join_ints(bad_supports));

  const GroupVectorXcd start = embed_input(tree, basis, x);
  const GroupVectorXcd after = generator_power(basis.level(), static_cast<std::uint64_t>(hx), start);
  const GroupVectorXcd final_embedding = embed_config(tree, basis, tree.root(), x);
  r.add("b final support " + label, support(after) == support(final_embedding),
        std::to_string(support(after).size()) + " elements", "exact");

  // tau^{h_x} then supp.embed  vs  embed then mu^{h_x} then supp.
  Configuration c = initial_config(m, input);
  const GroupVectorXcd c0 = embed_config(tree, basis, tree.node_at(x, hx), x);
  for (int i = 0; i < hx; ++i) c = step(m, c);
  const bool reaches_root = tree.node(tree.root()).config == c;
  r.add("diagram " + label,
        reaches_root && support(generator_power(basis.level(), static_cast<std::uint64_t>(hx), c0)) ==
                            support(final_embedding),
        to_string(m, c), "exact", reaches_root ? "" : "tau^h(c_0) is not the root configuration");

  const GroupVectorXcd one_more = step_operator(basis, after);
  r.info("b with k=|S(x)| " + label, support(one_more) == support(final_embedding) ? "equal" : "differs",
         "one iteration beyond h_x");
  return r;
}

Report verify_step_commutation(const VirtualTree& tree, const BasisAssignment& basis) {
  Report r = make_report("one generator step advances one configuration", tree, basis);
  for (BranchIndex x = 0; x < tree.branch_count(); ++x) {
    double worst = 0;
    std::vector<int> bad;
    GroupVectorXcd current = embed_at(tree, basis, x, 0);
    for (int t = 0; t < tree.height(); ++t) {
      GroupVectorXcd next = embed_at(tree, basis, x, t + 1);
      const VectorComparison cmp = compare(step_operator(basis, current), next);
      if (!cmp.same_support) bad.push_back(t);
      worst = std::max(worst, cmp.max_difference);
      current = std::move(next);
    }
    r.add("branch " + input_label(tree, x), bad.empty() && worst <= kAmplitudeTolerance,
          std::to_string(tree.height()) + " steps, max dev=" + format_real(worst), tol_string(),
          bad.empty() ? "" : "support mismatch at t=" + join_ints(bad));
  }
  return r;
}

Report verify_embedding_invariants(const VirtualTree& tree, const BasisAssignment& basis) {
  Report r = make_report("embedding invariants", tree, basis);
  const std::size_t n = tree.branch_count();
  std::vector<std::vector<GroupVectorXcd>> table(n);
  for (BranchIndex x = 0; x < n; ++x) {
    double worst = 0;
    for (int t = 0; t <= tree.height(); ++t) {
      table[x].push_back(embed_at(tree, basis, x, t));
      worst = std::max(worst, std::abs(norm(table[x].back()) - 1.0));
    }
    const double input_dev = std::abs(norm(embed_input(tree, basis, x)) - 1.0);
    r.add("norm " + input_label(tree, x), std::max(worst, input_dev) <= kAmplitudeTolerance,
          "max|norm-1|=" + format_real(std::max(worst, input_dev)), tol_string());
  }

  std::vector<int> nonuniform_support, uniform_vectors;
  for (int t = 0; t <= tree.height(); ++t) {
    const Support reference = support(table[0][static_cast<std::size_t>(t)]);
    bool same = reference.size() == n;
    bool distinct = true;
    for (BranchIndex x = 1; x < n; ++x) {
      if (support(table[x][static_cast<std::size_t>(t)]) != reference) same = false;
    }
    for (BranchIndex x = 0; x < n; ++x) {
      for (BranchIndex xp = x + 1; xp < n; ++xp) {
        if (compare(table[x][static_cast<std::size_t>(t)], table[xp][static_cast<std::size_t>(t)]).max_difference <=
            kAmplitudeTolerance) {
          distinct = false;
        }
      }
    }
    if (!same) nonuniform_support.push_back(t);
    if (!distinct) uniform_vectors.push_back(t);
  }
  r.add("support uniformity", nonuniform_support.empty(), std::to_string(tree.height() + 1) + " levels", "exact",
        nonuniform_support.empty() ? "" : "differs at t=" + join_ints(nonuniform_support));
  if (n >= 2) {
    r.add("non-uniform amplitudes", uniform_vectors.empty(), std::to_string(tree.height() + 1) + " levels", tol_string(),
          uniform_vectors.empty() ? "" : "coincide at t=" + join_ints(uniform_vectors));
  } else {
    r.add("non-uniform amplitudes", true, "", "", "single branch, vacuous");
  }
  return r;
}

Report verify_final_injectivity(std::span<const VirtualTree> trees, std::span<const BasisAssignment> bases) {
  Report r;
  r.title = "final supports are distinct across outputs";
  if (trees.size() != bases.size()) throw DomainError("one basis assignment per tree is required");
  std::vector<Support> finals;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    finals.push_back(support(embed_config(trees[i], bases[i], trees[i].root(), 0)));
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      r.add("y=" + std::to_string(trees[i].output()) + " vs y=" + std::to_string(trees[j].output()) +
                " L=" + std::to_string(trees[i].length()),
            finals[i] != finals[j], std::to_string(finals[i].size()) + "/" + std::to_string(finals[j].size()) + " elements",
            "exact");
    }
  }
  if (r.checks.empty()) r.add("pairs of outputs", true, "0", "exact", "vacuous");
  return r;
}

std::uint64_t iterated_exp(int m, std::uint64_t x) {
  if (m < 0) throw DomainError("iteration count must be nonnegative");
  std::uint64_t v = x;
  for (int i = 0; i < m; ++i) {
    if (v >= 64) {
      throw ResourceLimitError("2^[" + std::to_string(m) + "](" + std::to_string(x) + ") does not fit in 64 bits");
    }
    v = std::uint64_t{1} << v;
  }
  return v;
}

bool within_kalmar_bound(int level, int m, std::uint64_t length) {
  if (m == 0) return group_order(level) <= length;
  try {
    return static_cast<std::uint64_t>(level) <= iterated_exp(m - 1, length);
  } catch (const ResourceLimitError&) {
    return true;  // the bound exceeds 2^(2^64)
  }
}

namespace {

std::string bound_text(int m, std::uint64_t length) {
  try {
    return std::to_string(iterated_exp(m, length));
  } catch (const ResourceLimitError&) {
  }
  try {
    return "2^" + std::to_string(iterated_exp(m - 1, length));
  } catch (const ResourceLimitError&) {
  }
  return "2^[" + std::to_string(m) + "](" + std::to_string(length) + ")";
}

}  // namespace

Report kalmar_bound_check(const Machine& m, int kalmar_m, int max_length) {
  Report r;
  r.title = "iterated-exponential sizing for " + m.name() + " with m=" + std::to_string(kalmar_m);
  r.notes.push_back("N = ceil(log2(B(h+1))); check 2^N <= 2^[m](L)");
  for (int length = 1; length <= max_length; ++length) {
    const auto trees = trees_for_length(m, length);
    if (trees.empty()) {
      r.skip("L=" + std::to_string(length), "no nonempty trees");
      continue;
    }
    for (const auto& [y, tree] : trees) {
      const BasisAssignment basis = assign_basis(tree);
      std::int64_t space = 0;
      for (const Branch& b : tree.branches()) space = std::max(space, halt_space(b.computation));
      const bool ok = within_kalmar_bound(basis.level(), kalmar_m, static_cast<std::uint64_t>(length));
      r.add("y=" + std::to_string(y) + " L=" + std::to_string(length), ok,
            "2^N=" + std::to_string(group_order(basis.level())) + " bound=" + bound_text(kalmar_m, static_cast<std::uint64_t>(length)),
            "exact", "N=" + std::to_string(basis.level()) + " halt space=" + std::to_string(space));
    }
  }
  return r;
}

}  // namespace masa
