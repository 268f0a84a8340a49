#pragma once

// Aggregate verification suites shared by the CLI and the acceptance tests.

#include "masa/machine.hpp"
#include "masa/report.hpp"

#include <cstdint>
#include <filesystem>
#include <span>

namespace masa {

struct TowerSuiteOptions {
  int max_level = 6;
  int exhaustive_associativity_level = 5;
  std::uint64_t sampled_triples = 100000;
  std::uint64_t seed = 0x5eed;
};

/// Golden tables, Latin square, symmetry, identity, nesting, generator order,
/// generator row agreement and recurrence, twist permutations, associativity.
Report tower_suite(const TowerSuiteOptions& opt);

struct CountingSuiteOptions {
  int max_oracle_length = 14;
  int max_fib_length = 25;
};

/// Recursion vs exhaustive enumeration, Fibonacci identity, closed forms,
/// argmax against the printed threshold.
Report counting_suite(const CountingSuiteOptions& opt);

struct RepresentationSuiteOptions {
  int max_level = 5;
  int trials = 100;
  std::uint64_t seed = 0xa11ce;
};

/// Unitarity and homomorphism of left translation, the convolution bound,
/// generator_power against repeated translation.
Report representation_suite(const RepresentationSuiteOptions& opt);

/// Every verifier over every nonempty tree of `m` with L <= max_length,
/// final-support injectivity per length, and the iterated-exponential sizing
/// when the machine documents m.
Report embedding_suite(const Machine& m, int max_length);

/// Function agreement of a documented machine against direct arithmetic on
/// every input of its arity with length <= max_length.
Report machine_function_suite(const Machine& m, int max_length);

struct VerifyAllOptions {
  int max_level = 6;
  int max_length = 14;
  int max_embed_length = 6;
  std::filesystem::path machines_dir;
};

Report verify_all(const VerifyAllOptions& opt);

}  // namespace masa
