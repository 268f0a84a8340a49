#include "masa/error.hpp"
#include "masa/machine.hpp"
#include "masa/machine_io.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <fstream>
#include <map>
#include <optional>
#include <string>

namespace {

const std::filesystem::path kMachines = MASA_MACHINES_DIR;
const std::filesystem::path kFixtures = MASA_FIXTURES_DIR;

// Independent reference simulator working directly on the JSON and a string
// tape. Returns the final tape (trailing blanks trimmed), transition count and
// the largest cell ever nonblank or visited, or nullopt when the head leaves the tape.
struct RefResult {
  std::string tape;
  int transitions = 0;
  int head = 1;
  std::size_t widest = 0;
};

std::optional<RefResult> reference_run(const nlohmann::json& j, const std::string& input, int budget) {
  std::map<std::pair<std::string, char>, nlohmann::json> delta;
  for (const auto& t : j["transitions"]) {
    delta[{t["state"].get<std::string>(), t["read"].get<std::string>()[0]}] = t;
  }
  std::string tape = input;
  std::string state = j["start"];
  int head = 1;
  RefResult r;
  r.widest = input.size();
  while (state != "F" && r.transitions < budget) {
    if (static_cast<std::size_t>(head) > tape.size()) tape.resize(static_cast<std::size_t>(head), '_');
    const auto& t = delta.at({state, tape[static_cast<std::size_t>(head - 1)]});
    tape[static_cast<std::size_t>(head - 1)] = t["write"].get<std::string>()[0];
    head += t["move"].get<int>();
    state = t["next"];
    ++r.transitions;
    if (head < 1) return std::nullopt;
    const auto last = tape.find_last_of('1');
    r.widest = std::max({r.widest, last == std::string::npos ? 0 : last + 1, static_cast<std::size_t>(head)});
  }
  while (!tape.empty() && tape.back() == '_') tape.pop_back();
  r.tape = tape;
  r.head = head;
  return r;
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

std::string word(const masa::InputVector& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += '_';
    s += std::string(x[k] + 1, '1');
  }
  return s;
}

TEST(Machine, EncodingAndTapes) {
  EXPECT_EQ(masa::to_string(masa::encode_input(masa::InputVector{2})), "111");
  EXPECT_EQ(masa::to_string(masa::encode_input(masa::InputVector{1, 0})), "11_1");
  EXPECT_EQ(masa::input_length(masa::InputVector{1, 0}), 4u);
  EXPECT_EQ(masa::input_length(masa::InputVector{0}), 1u);
  EXPECT_THROW(masa::encode_input(masa::InputVector{}), masa::DomainError);
  EXPECT_EQ(masa::to_string(masa::final_tape(3)), "1111");
  EXPECT_EQ(masa::decode_output(masa::parse_tape("1111")), 3u);
  EXPECT_EQ(masa::decode_output(masa::parse_tape("11_1")), std::nullopt);
  EXPECT_EQ(masa::decode_output(masa::parse_tape("")), std::nullopt);
  masa::Tape t = masa::parse_tape("1__");
  masa::canonicalize(t);
  EXPECT_EQ(masa::to_string(t), "1");
  EXPECT_THROW(masa::parse_tape("1x"), masa::DomainError);
}

TEST(Machine, SuccessorRuns) {
  const masa::Machine succ = masa::load_machine(kMachines / "succ.json");
  const masa::Computation c0 = masa::run(succ, masa::InputVector{0}, 100);
  EXPECT_TRUE(c0.halted());
  EXPECT_EQ(c0.transitions(), 2u);
  EXPECT_EQ(masa::to_string(c0.last().tape), "11");

  const masa::Computation c2 = masa::run(succ, masa::InputVector{2}, 100);
  EXPECT_TRUE(masa::is_final(c2.last()));
  EXPECT_EQ(masa::to_string(c2.last().tape), "1111");
  EXPECT_EQ(c2.transitions(), 6u);
  EXPECT_EQ(masa::halt_space(c2), 4);
  EXPECT_EQ(masa::decode_output(c2.last().tape), 3u);
}

TEST(Machine, AddRuns) {
  const masa::Machine add = masa::load_machine(kMachines / "add.json");
  for (const masa::InputVector& x : {masa::InputVector{1, 1}, masa::InputVector{0, 2}, masa::InputVector{2, 0}}) {
    const masa::Computation c = masa::run(add, x, 1000);
    ASSERT_TRUE(masa::is_final(c.last())) << masa::to_string(x);
    EXPECT_EQ(masa::decode_output(c.last().tape), 2u);
  }
}

TEST(Machine, ShippedMachinesAgreeWithReferenceSimulator) {
  for (const char* name : {"succ", "add", "zero", "proj"}) {
    const auto path = kMachines / (std::string(name) + ".json");
    const nlohmann::json j = read_json(path);
    const masa::Machine m = masa::load_machine(path);
    const int arity = j["arity"];
    // every input vector of the documented arity with total length <= 9
    std::vector<masa::InputVector> inputs;
    std::function<void(masa::InputVector, int)> gen = [&](masa::InputVector x, int left) {
      if (static_cast<int>(x.size()) == arity) {
        inputs.push_back(x);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        auto y = x;
        y.push_back(static_cast<std::uint64_t>(v));
        gen(y, left - v);
      }
    };
    gen({}, 9 - (2 * arity - 1));
    for (const auto& x : inputs) {
      const auto want = reference_run(j, word(x), 5000);
      if (!want) {
        EXPECT_THROW(masa::run(m, x, 5000), masa::MachineFault) << name << " " << masa::to_string(x);
        continue;
      }
      const masa::Computation got = masa::run(m, x, 5000);
      EXPECT_EQ(masa::to_string(got.last().tape), want->tape) << name << " " << masa::to_string(x);
      EXPECT_EQ(got.transitions(), static_cast<std::size_t>(want->transitions)) << name;
      EXPECT_EQ(got.last().head, want->head) << name;
      EXPECT_EQ(masa::halt_space(got), static_cast<std::int64_t>(want->widest)) << name;
    }
  }
}

TEST(Machine, LoopingFixtureExhaustsBudget) {
  const masa::Machine loop = masa::load_machine(kFixtures / "loop.json");
  const masa::Computation c = masa::run(loop, masa::InputVector{0}, 10);
  EXPECT_FALSE(c.halted());
  EXPECT_EQ(c.configurations.size(), 11u);
}

TEST(Machine, LeftMoveFromCellOneFaults) {
  const masa::Machine fault = masa::load_machine(kFixtures / "fault.json");
  EXPECT_THROW(masa::run(fault, masa::InputVector{0}, 10), masa::MachineFault);
}

TEST(Machine, StepErrors) {
  const masa::Machine succ = masa::load_machine(kMachines / "succ.json");
  const masa::Computation c = masa::run(succ, masa::InputVector{0}, 10);
  EXPECT_THROW(masa::step(succ, c.last()), masa::UsageError);
  EXPECT_THROW(masa::run(succ, masa::InputVector{0}, 0), masa::DomainError);
  EXPECT_EQ(succ.state_name(masa::kFinalState), "F");
}

TEST(Machine, DefaultBudget) {
  EXPECT_EQ(masa::default_max_steps(1), 20u);
  EXPECT_EQ(masa::default_max_steps(5), 320u);
  EXPECT_EQ(masa::default_max_steps(200), std::numeric_limits<std::uint64_t>::max());
}

}  // namespace
