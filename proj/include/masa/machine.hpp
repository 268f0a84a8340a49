#pragma once

// Deterministic Turing machines on a one-way infinite tape over the unary
// alphabet {1}, extended with the blank symbol.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace masa {

enum class Symbol : std::uint8_t { Blank = 0, One = 1 };

/// Tape cells 1, 2, ... stored from index 0; cells past the end are blank.
using Tape = std::vector<Symbol>;

/// Renders a tape as "1"/"_" characters.
std::string to_string(const Tape& tape);
Tape parse_tape(const std::string& text);

/// Drops trailing blanks.
void canonicalize(Tape& tape);

using StateId = int;
inline constexpr StateId kFinalState = -1;

enum class Move : int { Left = -1, Right = 1 };

struct Action {
  StateId next = kFinalState;
  Move move = Move::Right;
  Symbol write = Symbol::Blank;
};

class Machine {
 public:
  /// `transitions[q][symbol]` for q in [0, states.size()). Throws DomainError
  /// unless every state has an action for both symbols and all targets exist.
  Machine(std::string name, std::vector<std::string> states, StateId start,
          std::vector<std::array<Action, 2>> transitions);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& states() const { return states_; }
  StateId start() const { return start_; }
  const Action& action(StateId q, Symbol read) const;
  const std::vector<std::array<Action, 2>>& transitions() const { return transitions_; }

  /// "F" for the final state.
  const std::string& state_name(StateId q) const;

  // Optional documentation carried by machine files.
  std::optional<int> arity;
  std::optional<std::string> function;
  std::optional<int> kalmar_m;

 private:
  std::string name_;
  std::vector<std::string> states_;
  StateId start_;
  std::vector<std::array<Action, 2>> transitions_;
};

struct Configuration {
  StateId state = 0;
  std::int64_t head = 1;  // 1-based
  Tape tape;              // canonical

  Symbol read() const;
  std::int64_t rightmost_nonblank() const { return static_cast<std::int64_t>(tape.size()); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

std::string to_string(const Machine& m, const Configuration& c);

enum class RunOutcome { Halted, BudgetExhausted };

struct Computation {
  std::vector<Configuration> configurations;
  RunOutcome outcome = RunOutcome::Halted;

  bool halted() const { return outcome == RunOutcome::Halted; }
  /// Number of transitions performed.
  std::size_t transitions() const { return configurations.empty() ? 0 : configurations.size() - 1; }
  const Configuration& last() const { return configurations.back(); }
};

using InputVector = std::vector<std::uint64_t>;

std::string to_string(const InputVector& x);

/// sum x_i + (2n - 1).
std::uint64_t input_length(std::span<const std::uint64_t> x);

/// Runs of x_i + 1 ones separated by single blanks.
Tape encode_input(std::span<const std::uint64_t> x);

Configuration initial_config(const Machine& m, std::span<const std::uint64_t> x);

/// One application of the transition function.
Configuration step(const Machine& m, const Configuration& c);

/// Steps from the initial configuration until the final state is entered or
/// `max_steps` transitions have been made.
Computation run(const Machine& m, std::span<const std::uint64_t> x, std::uint64_t max_steps);

/// 10 * 2^{input_length(x)}, saturating.
std::uint64_t default_max_steps(std::uint64_t input_length);

/// Ones on cells 1..y+1.
Tape final_tape(std::uint64_t y);

/// Final state with the head on cell 1.
bool is_final(const Configuration& c);

/// Largest cell touched: max over configurations of head and rightmost nonblank.
std::int64_t halt_space(const Computation& comp);

/// y when the tape is exactly f_y (a single run of ones starting at cell 1).
std::optional<std::uint64_t> decode_output(const Tape& tape);

}  // namespace masa
