#include "masa/machine_io.hpp"

#include "masa/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace masa {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw LoadError(source + ": " + where + ": " + what);
}

std::string require_string(const json& j, const char* key, const std::string& source, const std::string& where) {
  if (!j.contains(key)) fail(source, where, std::string("missing field '") + key + "'");
  if (!j.at(key).is_string()) fail(source, where, std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

Symbol parse_symbol(const std::string& text, const std::string& source, const std::string& where) {
  if (text == "1") return Symbol::One;
  if (text == "_") return Symbol::Blank;
  fail(source, where, "symbol must be \"1\" or \"_\", got \"" + text + "\"");
}

const char* symbol_text(Symbol s) { return s == Symbol::One ? "1" : "_"; }

}  // namespace

Machine parse_machine(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, "byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!j.is_object()) fail(source, "top level", "expected an object");

  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : source;

  if (!j.contains("states") || !j["states"].is_array()) fail(source, "top level", "missing array 'states'");
  std::vector<std::string> states;
  std::map<std::string, StateId> ids;
  for (std::size_t i = 0; i < j["states"].size(); ++i) {
    const json& s = j["states"][i];
    const std::string where = "states[" + std::to_string(i) + "]";
    if (!s.is_string()) fail(source, where, "state names must be strings");
    const auto state = s.get<std::string>();
    if (state == "F") fail(source, where, "the final state F must not be listed in 'states'");
    if (ids.contains(state)) fail(source, where, "duplicate state '" + state + "'");
    ids.emplace(state, static_cast<StateId>(states.size()));
    states.push_back(state);
  }
  if (states.empty()) fail(source, "states", "at least one state is required");

  const std::string start = require_string(j, "start", source, "top level");
  if (!ids.contains(start)) fail(source, "start", "unknown start state '" + start + "'");

  if (!j.contains("transitions") || !j["transitions"].is_array()) {
    fail(source, "top level", "missing array 'transitions'");
  }
  std::vector<std::array<std::optional<Action>, 2>> table(states.size());
  const json& transitions = j["transitions"];
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const json& t = transitions[i];
    const std::string where = "transitions[" + std::to_string(i) + "]";
    if (!t.is_object()) fail(source, where, "expected an object");
    const std::string state = require_string(t, "state", source, where);
    if (state == "F") fail(source, where, "the final state F has no outgoing transitions");
    if (!ids.contains(state)) fail(source, where, "unknown state '" + state + "'");
    const Symbol read = parse_symbol(require_string(t, "read", source, where), source, where);
    const std::string next = require_string(t, "next", source, where);
    if (next != "F" && !ids.contains(next)) fail(source, where, "unknown next state '" + next + "'");
    if (!t.contains("move") || !t["move"].is_number_integer()) fail(source, where, "'move' must be -1 or +1");
    const int move = t["move"].get<int>();
    if (move != -1 && move != 1) fail(source, where, "'move' must be -1 or +1, got " + std::to_string(move));
    const Symbol write = parse_symbol(require_string(t, "write", source, where), source, where);

    auto& slot = table[static_cast<std::size_t>(ids[state])][static_cast<std::size_t>(read)];
    if (slot) {
      fail(source, where, "duplicate transition for ('" + state + "', \"" + symbol_text(read) + "\")");
    }
    slot = Action{next == "F" ? kFinalState : ids[next], static_cast<Move>(move), write};
  }

  std::vector<std::array<Action, 2>> total(states.size());
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (Symbol s : {Symbol::One, Symbol::Blank}) {
      const auto& slot = table[q][static_cast<std::size_t>(s)];
      if (!slot) {
        fail(source, "transitions",
             "missing transition for ('" + states[q] + "', \"" + symbol_text(s) + "\"); the table must be total");
      }
      total[q][static_cast<std::size_t>(s)] = *slot;
    }
  }

  Machine m(name, std::move(states), ids[start], std::move(total));
  if (j.contains("arity")) {
    if (!j["arity"].is_number_integer()) fail(source, "arity", "must be an integer");
    m.arity = j["arity"].get<int>();
  }
  if (j.contains("function")) {
    if (!j["function"].is_string()) fail(source, "function", "must be a string");
    m.function = j["function"].get<std::string>();
  }
  if (j.contains("kalmar_m")) {
    if (!j["kalmar_m"].is_number_integer() || j["kalmar_m"].get<int>() < 0) {
      fail(source, "kalmar_m", "must be a nonnegative integer");
    }
    m.kalmar_m = j["kalmar_m"].get<int>();
  }
  return m;
}

Machine load_machine(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string() + ": cannot open machine file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_machine(buffer.str(), path.filename().string());
}

std::string machine_to_json(const Machine& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name();
  j["states"] = m.states();
  j["start"] = m.state_name(m.start());
  auto transitions = nlohmann::ordered_json::array();
  for (StateId q = 0; q < static_cast<StateId>(m.states().size()); ++q) {
    for (Symbol s : {Symbol::One, Symbol::Blank}) {
      const Action& a = m.action(q, s);
      nlohmann::ordered_json t;
      t["state"] = m.state_name(q);
      t["read"] = symbol_text(s);
      t["next"] = m.state_name(a.next);
      t["move"] = static_cast<int>(a.move);
      t["write"] = symbol_text(a.write);
      transitions.push_back(std::move(t));
    }
  }
  j["transitions"] = std::move(transitions);
  if (m.arity) j["arity"] = *m.arity;
  if (m.function) j["function"] = *m.function;
  if (m.kalmar_m) j["kalmar_m"] = *m.kalmar_m;
  return j.dump();
}

std::string machine_digest(const Machine& m) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : machine_to_json(m)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::vector<Machine> load_machine_library(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw LoadError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Machine> machines;
  for (const auto& f : files) machines.push_back(load_machine(f));
  return machines;
}

}  // namespace masa
