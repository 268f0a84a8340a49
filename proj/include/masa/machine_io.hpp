#pragma once

#include "masa/machine.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace masa {

/// Parses a machine definition:
///
///   { "name": "succ",                      (optional)
///     "states": ["s", "r"], "start": "s",
///     "transitions": [ {"state": "s", "read": "1", "next": "r", "move": 1, "write": "_"}, ... ],
///     "arity": 1, "function": "x1 + 1", "kalmar_m": 2 }   (optional metadata)
///
/// The final state is spelled "F" and may only appear as a `next` target.
/// Throws LoadError naming the offending entry.
Machine parse_machine(const std::string& text, const std::string& source = "<string>");

Machine load_machine(const std::filesystem::path& path);

/// Canonical JSON: sorted transitions, fixed key order.
std::string machine_to_json(const Machine& m);

/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string machine_digest(const Machine& m);

/// Every *.json file in `dir`, loaded in filename order.
std::vector<Machine> load_machine_library(const std::filesystem::path& dir);

}  // namespace masa
