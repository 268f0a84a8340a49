#include "masa/tree_dump.hpp"

#include "masa/machine_io.hpp"

#include <nlohmann/json.hpp>

namespace masa {

std::string tree_dump(const VirtualTree& tree, const BasisAssignment& basis, std::span<const Report> reports) {
  using nlohmann::ordered_json;
  const Machine& m = tree.machine();

  ordered_json j;
  j["machine"] = {{"name", m.name()}, {"digest", machine_digest(m)}};
  j["y"] = tree.output();
  j["L"] = tree.length();
  j["h"] = tree.height();
  j["conventions"] = report_conventions(tree, basis);

  auto branches = ordered_json::array();
  for (BranchIndex x = 0; x < tree.branch_count(); ++x) {
    const Branch& b = tree.branch(x);
    ordered_json bj;
    bj["input"] = b.input;
    bj["transitions"] = b.transitions;
    bj["padding"] = b.padding;
    // Leaf to root: virtual markers first, then c_0(x) .. c_F(y).
    auto configs = ordered_json::array();
    for (int d = tree.height(); d >= 0; --d) {
      const TreeNode& node = tree.node(tree.node_at(x, d));
      if (node.is_virtual()) {
        configs.push_back({{"virtual", -node.virtual_offset}});
      } else {
        configs.push_back({{"state", m.state_name(node.config->state)},
                           {"head", node.config->head},
                           {"tape", to_string(node.config->tape)}});
      }
    }
    bj["configurations"] = std::move(configs);
    bj["embedded_input"] = serialize(embed_input(tree, basis, x));
    branches.push_back(std::move(bj));
  }
  j["branches"] = std::move(branches);

  ordered_json bj;
  bj["level"] = basis.level();
  bj["offset"] = basis.offset();
  auto pairs = ordered_json::array();
  for (BranchIndex x = 0; x < basis.branches(); ++x) {
    for (int t = 0; t <= basis.height(); ++t) {
      pairs.push_back({{"branch", x}, {"t", t}, {"element", basis.element(x, t)}});
    }
  }
  bj["pairs"] = std::move(pairs);
  j["basis"] = std::move(bj);

  auto checks = ordered_json::array();
  for (const Report& r : reports) {
    for (const Check& c : r.checks) {
      checks.push_back({{"report", r.title},
                        {"name", c.name},
                        {"status", to_string(c.status)},
                        {"measured", c.measured},
                        {"tolerance", c.tolerance},
                        {"detail", c.detail}});
    }
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace masa
