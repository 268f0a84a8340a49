#include "masa/encoding.hpp"

#include "masa/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace masa {

BasisAssignment::BasisAssignment(int level, std::uint64_t offset, std::size_t branches, int height)
    : level_(level), offset_(offset), branches_(branches), height_(height) {
  if (level < 1 || level > kOrbitLevelCeiling) {
    throw ResourceLimitError("basis level " + std::to_string(level) + " is outside [1, " +
                             std::to_string(kOrbitLevelCeiling) + "]");
  }
  const std::uint64_t needed = offset + branches * (static_cast<std::uint64_t>(height) + 1);
  if (needed > group_order(level)) {
    throw DomainError("G_" + std::to_string(level) + " has " + std::to_string(group_order(level)) +
                      " elements, assignment needs " + std::to_string(needed));
  }
}

std::uint64_t BasisAssignment::position(BranchIndex j, int t) const {
  if (j >= branches_ || t < 0 || t > height_) {
    throw DomainError("pair (branch " + std::to_string(j) + ", t " + std::to_string(t) + ") is not assigned");
  }
  return offset_ + j * (static_cast<std::uint64_t>(height_) + 1) + static_cast<std::uint64_t>(t);
}

Element BasisAssignment::element(BranchIndex j, int t) const {
  return cached_orbit(level_).sequence[position(j, t)];
}

int level_for_capacity(std::uint64_t count) {
  int n = 1;
  while (group_order(n) < count) ++n;
  return n;
}

void validate_assignment(const BasisAssignment& basis) {
  const int level = basis.level();
  const ElementRow mu = generator(level);
  std::unordered_set<Element> seen;
  for (BranchIndex j = 0; j < basis.branches(); ++j) {
    for (int t = 0; t <= basis.height(); ++t) {
      const Element e = basis.element(j, t);
      if (!seen.insert(e).second) throw Error("basis assignment is not injective at element " + std::to_string(e));
      if (t < basis.height() && mu(e) != basis.element(j, t + 1)) {
        throw Error("generator does not advance (branch " + std::to_string(j) + ", t " + std::to_string(t) + ")");
      }
    }
  }
}

BasisAssignment assign_basis(const VirtualTree& tree) {
  const std::uint64_t pairs = tree.branch_count() * (static_cast<std::uint64_t>(tree.height()) + 1);
  const int level = level_for_capacity(pairs);
  if (level > kOrbitLevelCeiling) {
    throw ResourceLimitError("tree needs G_" + std::to_string(level) + ", above the limit " +
                             std::to_string(kOrbitLevelCeiling));
  }
  BasisAssignment basis(level, 0, tree.branch_count(), tree.height());
  validate_assignment(basis);
  return basis;
}

std::vector<BasisAssignment> assign_shared_basis(std::span<const VirtualTree> trees) {
  std::uint64_t total = 0;
  for (const auto& t : trees) total += t.branch_count() * (static_cast<std::uint64_t>(t.height()) + 1);
  const int level = level_for_capacity(total);
  if (level > kOrbitLevelCeiling) throw ResourceLimitError("shared assignment exceeds the orbit limit");
  std::vector<BasisAssignment> out;
  std::uint64_t offset = 0;
  for (const auto& t : trees) {
    out.emplace_back(level, offset, t.branch_count(), t.height());
    validate_assignment(out.back());
    offset += t.branch_count() * (static_cast<std::uint64_t>(t.height()) + 1);
  }
  return out;
}

GroupVectorXcd embed_at(const VirtualTree& tree, const BasisAssignment& basis, BranchIndex x, int t) {
  tree.branch(x);
  if (basis.branches() != tree.branch_count() || basis.height() != tree.height()) {
    throw DomainError("basis assignment does not belong to this tree");
  }
  const int d = tree.height() - t;
  GroupVectorXcd v(basis.level());
  for (NodeId c : tree.nodes_at_depth(d)) {
    for (BranchIndex w : inputs_at(tree, c)) {
      v.add(basis.element(w, t), alpha(tree, x, c, w));
    }
  }
  return v;
}

GroupVectorXcd embed_config(const VirtualTree& tree, const BasisAssignment& basis, NodeId c, BranchIndex x) {
  const TreeNode& node = tree.node(c);
  if (tree.node_at(x, node.depth) != c) {
    throw DomainError("node " + std::to_string(c) + " is not on the branch of input (" +
                      to_string(tree.branch(x).input) + ")");
  }
  return embed_at(tree, basis, x, tree.height() - node.depth);
}

GroupVectorXcd embed_input(const VirtualTree& tree, const BasisAssignment& basis, BranchIndex x) {
  const Branch& b = tree.branch(x);
  return generator_power(basis.level(), static_cast<std::uint64_t>(b.padding), embed_at(tree, basis, x, 0));
}

GroupVectorXcd step_operator(const BasisAssignment& basis, const GroupVectorXcd& v) {
  return generator_power(basis.level(), 1, v);
}

VectorComparison compare(const GroupVectorXcd& a, const GroupVectorXcd& b) {
  VectorComparison out;
  out.same_support = a.level() == b.level() && support(a) == support(b);
  if (a.level() == b.level()) {
    const GroupVectorXcd diff = a - b;
    diff.for_each([&](Element, const std::complex<double>& z) { out.max_difference = std::max(out.max_difference, std::abs(z)); });
  } else {
    out.max_difference = INFINITY;
  }
  return out;
}

std::string serialize(const GroupVectorXcd& v) {
  std::string out;
  v.for_each([&](Element g, const std::complex<double>& z) {
    if (!out.empty()) out += ',';
    out += std::to_string(g) + ':' + format_real(z.real()) + ':' + format_real(z.imag());
  });
  return out;
}

std::vector<std::string> report_conventions(const VirtualTree& tree, const BasisAssignment& basis) {
  return {
      "machine " + tree.machine().name() + ", y=" + std::to_string(tree.output()) + ", L=" +
          std::to_string(tree.length()) + ", branches=" + std::to_string(tree.branch_count()) +
          ", h=" + std::to_string(tree.height()) + ", N=" + std::to_string(basis.level()),
      "h_x counts transitions (|S(x)| - 1); h = max h_x; k_x = h - h_x",
      "operators act on the finite truncation l^2(G_N); no embedding into the factor is applied",
  };
}

}  // namespace masa
