#include "masa/encoding.hpp"
#include "masa/error.hpp"
#include "masa/machine_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

namespace {

const std::filesystem::path kMachines = MASA_MACHINES_DIR;
const std::filesystem::path kFixtures = MASA_FIXTURES_DIR;

masa::Machine machine(const char* name) { return masa::load_machine(kMachines / (std::string(name) + ".json")); }

TEST(VirtualTree, DecodeWord) {
  EXPECT_EQ(masa::decode_word("111_1"), (masa::InputVector{2, 0}));
  EXPECT_EQ(masa::decode_word("1"), (masa::InputVector{0}));
  EXPECT_THROW(masa::decode_word("1__1"), masa::DomainError);
  EXPECT_THROW(masa::decode_word("_1"), masa::DomainError);
}

TEST(VirtualTree, InputsFor) {
  const masa::Machine succ = machine("succ");
  EXPECT_EQ(masa::inputs_for(succ, 3, 3), (std::vector<masa::InputVector>{{2}}));
  EXPECT_TRUE(masa::inputs_for(succ, 0, 3).empty());
  const masa::Machine add = machine("add");
  EXPECT_EQ(masa::inputs_for(add, 2, 5), (std::vector<masa::InputVector>{{2, 0}, {1, 1}, {0, 2}}));
  // (0) halts with its head away from cell 1, so it is not a member of any tree.
  EXPECT_TRUE(masa::trees_for_length(add, 1).empty());
}

TEST(VirtualTree, EmptyTreeIsDomainError) {
  EXPECT_THROW(masa::build_virtual_tree(machine("succ"), 0, 3), masa::DomainError);
}

TEST(VirtualTree, NonHaltingInputIsBudgetError) {
  const masa::Machine loop = masa::load_machine(kFixtures / "loop.json");
  EXPECT_THROW(masa::inputs_for(loop, 0, 1), masa::BudgetExceeded);
}

TEST(VirtualTree, MixedHeightsArePaddedAtTheLeaf) {
  const masa::VirtualTree tree = masa::build_virtual_tree(machine("succ"), 4, 5);
  EXPECT_EQ(tree.height(), 6);
  ASSERT_EQ(tree.branch_count(), 3u);
  const std::vector<std::pair<int, int>> hk = {{6, 0}, {4, 2}, {2, 4}};
  for (masa::BranchIndex j = 0; j < 3; ++j) {
    EXPECT_EQ(tree.branch(j).transitions, hk[j].first);
    EXPECT_EQ(tree.branch(j).padding, hk[j].second);
    EXPECT_EQ(tree.branch(j).path.size(), 7u);
  }
  // branch (0,2): depths 3..6 are virtual with offsets 1..4
  for (int d = 0; d <= 6; ++d) {
    const masa::TreeNode& n = tree.node(tree.node_at(2, d));
    EXPECT_EQ(n.is_virtual(), d > 2) << d;
    if (n.is_virtual()) {
      EXPECT_EQ(n.virtual_offset, d - 2);
      EXPECT_EQ(n.virtual_branch, 2u);
    }
  }
}

// Independent reconstruction of the levels from the raw computations.
TEST(VirtualTree, NodesMergeByDepthAndConfiguration) {
  for (const char* name : {"succ", "add", "zero", "proj"}) {
    const masa::Machine m = machine(name);
    for (int L = 1; L <= 6; ++L) {
      for (const auto& [y, tree] : masa::trees_for_length(m, L)) {
        const int h = tree.height();
        int max_h = 0;
        for (const masa::Branch& b : tree.branches()) max_h = std::max(max_h, static_cast<int>(b.computation.transitions()));
        ASSERT_EQ(h, max_h);
        for (int d = 0; d <= h; ++d) {
          std::set<masa::Configuration> real;
          int virtuals = 0;
          for (const masa::Branch& b : tree.branches()) {
            const int hx = static_cast<int>(b.computation.transitions());
            if (d <= hx) {
              real.insert(b.computation.configurations[static_cast<std::size_t>(hx - d)]);
            } else {
              ++virtuals;
            }
          }
          EXPECT_EQ(tree.nodes_at_depth(d).size(), real.size() + static_cast<std::size_t>(virtuals))
              << name << " y=" << y << " L=" << L << " d=" << d;
        }
        const masa::TreeNode& root = tree.node(tree.root());
        EXPECT_EQ(root.config->tape, masa::final_tape(y));
        EXPECT_EQ(root.config->head, 1);
        EXPECT_EQ(masa::inputs_at(tree, tree.root()).size(), tree.branch_count());
        EXPECT_EQ(masa::leaves(tree).size(), tree.branch_count());
      }
    }
  }
}

TEST(VirtualTree, Alpha) {
  const masa::VirtualTree tree = masa::build_virtual_tree(machine("add"), 2, 5);
  const masa::NodeId leaf = masa::leaves(tree)[0];
  EXPECT_NEAR(masa::alpha(tree, 0, leaf, 0), std::sqrt(2.0) / 2.0, 1e-15);
  EXPECT_NEAR(masa::alpha(tree, 0, leaf, 1), 0.5, 1e-15);
  EXPECT_EQ(masa::depth(tree, leaf), tree.height());
  EXPECT_EQ(masa::level(tree, tree.root()).size(), 1u);
}

}  // namespace
