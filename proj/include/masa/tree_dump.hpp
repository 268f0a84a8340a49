#pragma once

#include "masa/encoding.hpp"

#include <span>
#include <string>

namespace masa {

/// JSON dump of a tree, its basis assignment and any verifier results.
/// Keys appear in a fixed order and the output is byte-stable for golden
/// files:
///
///   machine{name,digest} y L h
///   branches[{input, transitions, padding, configurations[], embedded_input}]
///   basis{level, offset, pairs[{branch, t, element}]}
///   checks[{report, name, status, measured, tolerance, detail}]
std::string tree_dump(const VirtualTree& tree, const BasisAssignment& basis, std::span<const Report> reports = {});

}  // namespace masa
