#include "masa/counting.hpp"
#include "masa/encoding.hpp"
#include "masa/error.hpp"

#include <algorithm>
#include <utility>

namespace masa {

namespace {

struct LengthRuns {
  std::vector<InputVector> inputs;
  std::vector<Computation> computations;
  std::vector<std::optional<std::uint64_t>> outputs;  // set when the run ends in a final configuration
};

// Runs every input of the given length once.
LengthRuns run_length(const Machine& m, int length, std::optional<std::uint64_t> max_steps) {
  if (length < 1) throw DomainError("input length must be at least 1");
  const std::uint64_t budget = max_steps.value_or(default_max_steps(static_cast<std::uint64_t>(length)));
  LengthRuns runs;
  for (int n = 1; n <= max_parts(length); ++n) {
    for (const std::string& word : enumerate_valid(length, n)) {
      InputVector x = decode_word(word);
      std::optional<std::uint64_t> out;
      Computation comp;
      try {
        comp = run(m, x, budget);
      } catch (const MachineFault&) {
        runs.inputs.push_back(std::move(x));
        runs.computations.emplace_back();
        runs.outputs.push_back(std::nullopt);
        continue;
      }
      if (!comp.halted()) {
        throw BudgetExceeded("machine '" + m.name() + "' did not halt on input (" + to_string(x) + ") within " +
                             std::to_string(budget) + " steps");
      }
      if (is_final(comp.last())) out = decode_output(comp.last().tape);
      runs.inputs.push_back(std::move(x));
      runs.computations.push_back(std::move(comp));
      runs.outputs.push_back(out);
    }
  }
  return runs;
}

}  // namespace

InputVector decode_word(const std::string& word) {
  InputVector x;
  std::uint64_t run = 0;
  for (char ch : word) {
    if (ch == '1') {
      ++run;
    } else {
      if (run == 0) throw DomainError("word '" + word + "' is not a valid input tape");
      x.push_back(run - 1);
      run = 0;
    }
  }
  if (run == 0) throw DomainError("word '" + word + "' is not a valid input tape");
  x.push_back(run - 1);
  return x;
}

std::vector<InputVector> inputs_for(const Machine& m, std::uint64_t y, int length,
                                    std::optional<std::uint64_t> max_steps) {
  LengthRuns runs = run_length(m, length, max_steps);
  std::vector<InputVector> out;
  for (std::size_t i = 0; i < runs.inputs.size(); ++i) {
    if (runs.outputs[i] == y) out.push_back(runs.inputs[i]);
  }
  return out;
}

VirtualTree build_virtual_tree(const Machine& m, std::uint64_t y, int length, std::optional<std::uint64_t> max_steps) {
  LengthRuns runs = run_length(m, length, max_steps);
  std::vector<InputVector> inputs;
  std::vector<Computation> comps;
  for (std::size_t i = 0; i < runs.inputs.size(); ++i) {
    if (runs.outputs[i] == y) {
      inputs.push_back(std::move(runs.inputs[i]));
      comps.push_back(std::move(runs.computations[i]));
    }
  }
  if (inputs.empty()) {
    throw DomainError("no tree for this (y, L): machine '" + m.name() + "' has no input of length " +
                      std::to_string(length) + " with output " + std::to_string(y));
  }
  return VirtualTree(m, y, length, std::move(inputs), std::move(comps));
}

std::map<std::uint64_t, VirtualTree> trees_for_length(const Machine& m, int length,
                                                      std::optional<std::uint64_t> max_steps) {
  LengthRuns runs = run_length(m, length, max_steps);
  std::map<std::uint64_t, std::pair<std::vector<InputVector>, std::vector<Computation>>> grouped;
  for (std::size_t i = 0; i < runs.inputs.size(); ++i) {
    if (!runs.outputs[i]) continue;
    auto& [inputs, comps] = grouped[*runs.outputs[i]];
    inputs.push_back(std::move(runs.inputs[i]));
    comps.push_back(std::move(runs.computations[i]));
  }
  std::map<std::uint64_t, VirtualTree> trees;
  for (auto& [y, group] : grouped) {
    trees.emplace(y, VirtualTree(m, y, length, std::move(group.first), std::move(group.second)));
  }
  return trees;
}

VirtualTree::VirtualTree(Machine machine, std::uint64_t output, int length, std::vector<InputVector> inputs,
                         std::vector<Computation> computations)
    : machine_(std::move(machine)), output_(output), length_(length) {
  if (inputs.empty()) throw DomainError("a virtual tree needs at least one input");
  if (inputs.size() != computations.size()) throw DomainError("one computation per input is required");

  const Configuration expected_root{kFinalState, 1, final_tape(output)};
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    const Computation& comp = computations[j];
    if (!comp.halted() || comp.last() != expected_root) {
      throw DomainError("computation of (" + to_string(inputs[j]) + ") does not end in c_F(" +
                        std::to_string(output) + ")");
    }
    Branch b;
    b.input = std::move(inputs[j]);
    b.computation = std::move(computations[j]);
    b.transitions = static_cast<int>(b.computation.transitions());
    height_ = std::max(height_, b.transitions);
    branches_.push_back(std::move(b));
  }

  levels_.assign(static_cast<std::size_t>(height_) + 1, {});
  std::map<std::pair<int, Configuration>, NodeId> real_nodes;
  for (BranchIndex j = 0; j < branches_.size(); ++j) {
    Branch& b = branches_[j];
    b.padding = height_ - b.transitions;
    b.path.resize(static_cast<std::size_t>(height_) + 1);
    for (int d = 0; d <= height_; ++d) {
      NodeId id;
      if (d <= b.transitions) {
        const Configuration& c = b.computation.configurations[static_cast<std::size_t>(b.transitions - d)];
        auto [it, inserted] = real_nodes.try_emplace({d, c}, nodes_.size());
        id = it->second;
        if (inserted) {
          TreeNode node;
          node.depth = d;
          node.config = c;
          nodes_.push_back(std::move(node));
          levels_[static_cast<std::size_t>(d)].push_back(id);
        }
      } else {
        id = nodes_.size();
        TreeNode node;
        node.depth = d;
        node.virtual_branch = j;
        node.virtual_offset = d - b.transitions;
        nodes_.push_back(std::move(node));
        levels_[static_cast<std::size_t>(d)].push_back(id);
      }
      nodes_[id].branches.push_back(j);
      b.path[static_cast<std::size_t>(d)] = id;
    }
  }
  for (auto& level_nodes : levels_) std::sort(level_nodes.begin(), level_nodes.end());
}

const Branch& VirtualTree::branch(BranchIndex j) const {
  if (j >= branches_.size()) throw DomainError("branch " + std::to_string(j) + " is not in the tree");
  return branches_[j];
}

BranchIndex VirtualTree::branch_of(const InputVector& x) const {
  for (BranchIndex j = 0; j < branches_.size(); ++j) {
    if (branches_[j].input == x) return j;
  }
  throw DomainError("input (" + to_string(x) + ") is not in the tree");
}

const TreeNode& VirtualTree::node(NodeId id) const {
  if (id >= nodes_.size()) throw DomainError("node " + std::to_string(id) + " is not in the tree");
  return nodes_[id];
}

NodeId VirtualTree::node_at(BranchIndex j, int d) const {
  const Branch& b = branch(j);
  if (d < 0 || d > height_) throw DomainError("depth " + std::to_string(d) + " is outside the tree");
  return b.path[static_cast<std::size_t>(d)];
}

const std::vector<NodeId>& VirtualTree::nodes_at_depth(int d) const {
  if (d < 0 || d > height_) throw DomainError("depth " + std::to_string(d) + " is outside the tree");
  return levels_[static_cast<std::size_t>(d)];
}

std::vector<NodeId> leaves(const VirtualTree& tree) {
  std::vector<NodeId> out;
  out.reserve(tree.branch_count());
  for (const Branch& b : tree.branches()) out.push_back(b.path.back());
  return out;
}

int depth(const VirtualTree& tree, NodeId node) { return tree.node(node).depth; }

const std::vector<NodeId>& level(const VirtualTree& tree, NodeId node) {
  return tree.nodes_at_depth(tree.node(node).depth);
}

const std::vector<BranchIndex>& inputs_at(const VirtualTree& tree, NodeId node) { return tree.node(node).branches; }

double alpha(const VirtualTree& tree, BranchIndex x, NodeId c, BranchIndex x_prime) {
  tree.branch(x);
  tree.branch(x_prime);
  tree.node(c);
  const double leaf_count = static_cast<double>(leaves(tree).size());
  return std::sqrt(x == x_prime ? 2.0 : 1.0) / std::sqrt(leaf_count + 1.0);
}

}  // namespace masa
