#include "masa/machine.hpp"

#include "masa/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace masa {

namespace {

std::size_t symbol_index(Symbol s) { return static_cast<std::size_t>(s); }

const std::string kFinalName = "F";

}  // namespace

std::string to_string(const Tape& tape) {
  std::string out;
  out.reserve(tape.size());
  for (Symbol s : tape) out.push_back(s == Symbol::One ? '1' : '_');
  return out;
}

Tape parse_tape(const std::string& text) {
  Tape tape;
  tape.reserve(text.size());
  for (char ch : text) {
    if (ch == '1') {
      tape.push_back(Symbol::One);
    } else if (ch == '_') {
      tape.push_back(Symbol::Blank);
    } else {
      throw DomainError(std::string("tape symbol must be '1' or '_', got '") + ch + "'");
    }
  }
  canonicalize(tape);
  return tape;
}

void canonicalize(Tape& tape) {
  while (!tape.empty() && tape.back() == Symbol::Blank) tape.pop_back();
}

Machine::Machine(std::string name, std::vector<std::string> states, StateId start,
                 std::vector<std::array<Action, 2>> transitions)
    : name_(std::move(name)), states_(std::move(states)), start_(start), transitions_(std::move(transitions)) {
  const auto n = static_cast<StateId>(states_.size());
  if (n == 0) throw DomainError("machine '" + name_ + "' has no states");
  if (start_ < 0 || start_ >= n) throw DomainError("machine '" + name_ + "': start state out of range");
  if (transitions_.size() != states_.size()) {
    throw DomainError("machine '" + name_ + "': transition table must have one row per state");
  }
  for (StateId q = 0; q < n; ++q) {
    for (const Action& a : transitions_[static_cast<std::size_t>(q)]) {
      if (a.next != kFinalState && (a.next < 0 || a.next >= n)) {
        throw DomainError("machine '" + name_ + "': transition from '" + states_[static_cast<std::size_t>(q)] +
                          "' targets an unknown state");
      }
    }
  }
}

const Action& Machine::action(StateId q, Symbol read) const {
  if (q == kFinalState) throw UsageError("the final state has no outgoing transitions");
  return transitions_.at(static_cast<std::size_t>(q))[symbol_index(read)];
}

const std::string& Machine::state_name(StateId q) const {
  if (q == kFinalState) return kFinalName;
  return states_.at(static_cast<std::size_t>(q));
}

Symbol Configuration::read() const {
  const auto idx = static_cast<std::size_t>(head - 1);
  return idx < tape.size() ? tape[idx] : Symbol::Blank;
}

std::string to_string(const Machine& m, const Configuration& c) {
  std::ostringstream os;
  os << '(' << m.state_name(c.state) << ", " << c.head << ", " << to_string(c.tape) << ')';
  return os.str();
}

std::string to_string(const InputVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

std::uint64_t input_length(std::span<const std::uint64_t> x) {
  if (x.empty()) throw DomainError("input vector must have at least one component");
  std::uint64_t total = 2 * x.size() - 1;
  for (std::uint64_t xi : x) total += xi;
  return total;
}

Tape encode_input(std::span<const std::uint64_t> x) {
  if (x.empty()) throw DomainError("input vector must have at least one component");
  Tape tape;
  tape.reserve(input_length(x));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) tape.push_back(Symbol::Blank);
    tape.insert(tape.end(), x[i] + 1, Symbol::One);
  }
  return tape;
}

Configuration initial_config(const Machine& m, std::span<const std::uint64_t> x) {
  return Configuration{m.start(), 1, encode_input(x)};
}

Configuration step(const Machine& m, const Configuration& c) {
  if (c.state == kFinalState) throw UsageError("cannot step a configuration in the final state");
  const Action& a = m.action(c.state, c.read());
  Configuration next{a.next, c.head + static_cast<int>(a.move), c.tape};
  if (next.head < 1) {
    throw MachineFault("machine '" + m.name() + "' moved left from cell 1 in state '" + m.state_name(c.state) +
                       "'");
  }
  const auto idx = static_cast<std::size_t>(c.head - 1);
  if (idx >= next.tape.size()) {
    if (a.write == Symbol::One) {
      next.tape.resize(idx + 1, Symbol::Blank);
      next.tape[idx] = Symbol::One;
    }
  } else {
    next.tape[idx] = a.write;
    canonicalize(next.tape);
  }
  return next;
}

Computation run(const Machine& m, std::span<const std::uint64_t> x, std::uint64_t max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be at least 1");
  Computation comp;
  comp.configurations.push_back(initial_config(m, x));
  for (std::uint64_t s = 0; s < max_steps; ++s) {
    if (comp.last().state == kFinalState) return comp;
    comp.configurations.push_back(step(m, comp.last()));
  }
  comp.outcome = comp.last().state == kFinalState ? RunOutcome::Halted : RunOutcome::BudgetExhausted;
  return comp;
}

std::uint64_t default_max_steps(std::uint64_t length) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (length >= 60) return kMax;
  return 10 * (std::uint64_t{1} << length);
}

Tape final_tape(std::uint64_t y) { return Tape(y + 1, Symbol::One); }

bool is_final(const Configuration& c) { return c.state == kFinalState && c.head == 1; }

std::int64_t halt_space(const Computation& comp) {
  if (comp.configurations.empty()) throw DomainError("halt_space of an empty computation");
  std::int64_t space = 0;
  for (const Configuration& c : comp.configurations) {
    space = std::max({space, c.head, c.rightmost_nonblank()});
  }
  return space;
}

std::optional<std::uint64_t> decode_output(const Tape& tape) {
  if (tape.empty()) return std::nullopt;
  if (std::any_of(tape.begin(), tape.end(), [](Symbol s) { return s != Symbol::One; })) return std::nullopt;
  return tape.size() - 1;
}

}  // namespace masa
