#pragma once

// Computational and virtual trees of a machine, their layout along the
// generator orbit of G_N, and the l^2(G_N) embedding of configurations.

#include "masa/group_vector.hpp"
#include "masa/machine.hpp"
#include "masa/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace masa {

using NodeId = std::size_t;
using BranchIndex = std::size_t;

/// Node of a virtual tree. Real nodes are identified by (depth, configuration)
/// across branches; virtual nodes are per-branch padding markers c_0^{-k}(x).
struct TreeNode {
  int depth = 0;  // distance from the root
  std::optional<Configuration> config;
  BranchIndex virtual_branch = 0;  // meaningful when !config
  int virtual_offset = 0;          // k in c_0^{-k}(x)
  std::vector<BranchIndex> branches;  // branches through this node, ascending

  bool is_virtual() const { return !config.has_value(); }
};

struct Branch {
  InputVector input;
  Computation computation;   // c_0(x) .. c_F(y)
  int transitions = 0;       // h_x
  int padding = 0;           // k_x = h - h_x
  std::vector<NodeId> path;  // path[d] is the node at depth d; path[0] is the root
};

/// Regular tree of every computation of length-L inputs ending at c_F(y),
/// short branches padded with virtual configurations at the leaf end.
class VirtualTree {
 public:
  VirtualTree(Machine machine, std::uint64_t output, int length, std::vector<InputVector> inputs,
              std::vector<Computation> computations);

  const Machine& machine() const { return machine_; }
  std::uint64_t output() const { return output_; }
  int length() const { return length_; }
  /// Common branch transition count h.
  int height() const { return height_; }

  std::size_t branch_count() const { return branches_.size(); }
  const std::vector<Branch>& branches() const { return branches_; }
  const Branch& branch(BranchIndex j) const;
  BranchIndex branch_of(const InputVector& x) const;

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(NodeId id) const;
  NodeId root() const { return branches_.front().path.front(); }
  NodeId node_at(BranchIndex j, int depth) const;

  /// Nodes at `depth`, ascending ids.
  const std::vector<NodeId>& nodes_at_depth(int depth) const;

 private:
  Machine machine_;
  std::uint64_t output_;
  int length_;
  int height_ = 0;
  std::vector<Branch> branches_;
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<NodeId>> levels_;
};

/// Decodes a valid tape word ("1"/"_") into the integer vector it encodes.
InputVector decode_word(const std::string& word);

/// Every input of length L whose computation ends in c_F(y), in enumeration
/// order. Inputs that fault or halt elsewhere are not members. Throws
/// BudgetExceeded naming the first input that does not halt within
/// `max_steps` (default 10 * 2^L).
std::vector<InputVector> inputs_for(const Machine& m, std::uint64_t y, int length,
                                    std::optional<std::uint64_t> max_steps = std::nullopt);

/// Throws DomainError when no input of length L produces y.
VirtualTree build_virtual_tree(const Machine& m, std::uint64_t y, int length,
                               std::optional<std::uint64_t> max_steps = std::nullopt);

/// All nonempty trees at length L, keyed by output.
std::map<std::uint64_t, VirtualTree> trees_for_length(const Machine& m, int length,
                                                      std::optional<std::uint64_t> max_steps = std::nullopt);

/// Leaf of each branch, indexed by branch.
std::vector<NodeId> leaves(const VirtualTree& tree);
int depth(const VirtualTree& tree, NodeId node);
const std::vector<NodeId>& level(const VirtualTree& tree, NodeId node);
/// Branches passing through the subtree rooted at `node`.
const std::vector<BranchIndex>& inputs_at(const VirtualTree& tree, NodeId node);

/// sqrt(1 + [x == x']) / sqrt(|leaves| + 1).
double alpha(const VirtualTree& tree, BranchIndex x, NodeId c, BranchIndex x_prime);

/// Places (branch j, depth-from-leaf t) at orbit position offset + j*(h+1) + t
/// of G_N, so that translation by the generator advances every branch by one.
class BasisAssignment {
 public:
  BasisAssignment(int level, std::uint64_t offset, std::size_t branches, int height);

  int level() const { return level_; }
  std::uint64_t offset() const { return offset_; }
  std::size_t branches() const { return branches_; }
  int height() const { return height_; }

  std::uint64_t position(BranchIndex j, int t) const;
  Element element(BranchIndex j, int t) const;

 private:
  int level_;
  std::uint64_t offset_;
  std::size_t branches_;
  int height_;
};

/// Smallest N >= 1 with 2^N >= count.
int level_for_capacity(std::uint64_t count);

BasisAssignment assign_basis(const VirtualTree& tree);

/// One assignment per tree on a common G_N, trees laid out consecutively.
std::vector<BasisAssignment> assign_shared_basis(std::span<const VirtualTree> trees);

/// Verifies injectivity and the one-step property; throws Error otherwise.
void validate_assignment(const BasisAssignment& basis);

/// [[c]]_x for a node c on branch x.
GroupVectorXcd embed_config(const VirtualTree& tree, const BasisAssignment& basis, NodeId c, BranchIndex x);

/// [[c]]_x for the node of branch x at depth-from-leaf t.
GroupVectorXcd embed_at(const VirtualTree& tree, const BasisAssignment& basis, BranchIndex x, int t);

/// [[x]] = mu_N^{k_x}([[leaf_x]]_x).
GroupVectorXcd embed_input(const VirtualTree& tree, const BasisAssignment& basis, BranchIndex x);

/// Left translation by the generator of G_N.
GroupVectorXcd step_operator(const BasisAssignment& basis, const GroupVectorXcd& v);

struct VectorComparison {
  bool same_support = false;
  double max_difference = 0;
};

VectorComparison compare(const GroupVectorXcd& a, const GroupVectorXcd& b);

/// "element:real:imag" triples, ascending elements, comma separated.
std::string serialize(const GroupVectorXcd& v);

inline constexpr double kAmplitudeTolerance = 1e-12;

/// Notes stating the conventions every verifier report carries.
std::vector<std::string> report_conventions(const VirtualTree& tree, const BasisAssignment& basis);

/// (a) equal supports for inputs at the same level; (b) the same after k
/// generator steps from both embedded inputs.
Report verify_support_equality(const VirtualTree& tree, const BasisAssignment& basis);
/// (a) unit norms along each branch; (b) the sqrt(2) coefficient relation
/// between translated inputs, with exponents aligned by level.
Report verify_coefficients(const VirtualTree& tree, const BasisAssignment& basis);
/// (a) each transition of x is one generator step of its embedding; (b) h_x
/// steps from [[x]] reach the support of the final configuration.
Report verify_transitions(const Machine& m, const InputVector& x, const VirtualTree& tree, const BasisAssignment& basis);

/// mu_N([[c_t]]_x) == [[c_{t+1}]]_x for every branch and every t < h.
Report verify_step_commutation(const VirtualTree& tree, const BasisAssignment& basis);

/// Unit norms, support uniformity within a level, non-uniform amplitudes
/// across inputs.
Report verify_embedding_invariants(const VirtualTree& tree, const BasisAssignment& basis);

/// Final supports of distinct outputs differ under a shared assignment.
Report verify_final_injectivity(std::span<const VirtualTree> trees, std::span<const BasisAssignment> bases);

/// 2^[0](x) = x, 2^[m+1](x) = 2^(2^[m](x)). Throws ResourceLimitError when the
/// result does not fit in 64 bits.
std::uint64_t iterated_exp(int m, std::uint64_t x);

/// Whether 2^level <= 2^[m](length), compared without overflow.
bool within_kalmar_bound(int level, int m, std::uint64_t length);

Report kalmar_bound_check(const Machine& m, int kalmar_m, int max_length);

}  // namespace masa
