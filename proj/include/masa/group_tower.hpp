#pragma once

// Cyclic groups C_{2^i} in the self-similar labeling: recursive twist
// matrices, Cayley tables, generator rows and orbits.

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace masa {

using Element = std::uint32_t;

/// Permutation matrix T(i) of size 2^i x 2^i.
using TwistMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Cayley table of G_i = C_{2^i}; entry (a, b) is the product a.b.
using GroupTable = Eigen::Matrix<std::uint16_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Row vector of elements (generator rows, orbits).
using ElementRow = Eigen::Matrix<Element, Eigen::Dynamic, 1>;

/// Hard ceiling imposed by the 16-bit table entries.
inline constexpr int kTableLevelCeiling = 16;

/// Orbit and generator rows are O(2^i) and allowed further than dense tables.
inline constexpr int kOrbitLevelCeiling = 24;

/// Largest level for which dense tables are materialized. Defaults to 12;
/// the MASA_MAX_LEVEL environment variable overrides it (capped at 16).
int max_table_level();

/// Number of elements of G_i.
inline constexpr std::uint64_t group_order(int level) { return std::uint64_t{1} << level; }

/// The generator element mu_i = 2^{i-1} of G_i (i >= 1).
Element generator_element(int level);

TwistMatrix twist(int level);

/// Row permutation applied by T(i): (T(i) * M).row(r) == M.row(sigma[r]).
std::vector<Element> twist_permutation(int level);

GroupTable group_table(int level);

/// Shared read-only table for `level`, built on first use.
const GroupTable& cached_table(int level);

/// Row 2^{i-1} of group_table(i), built from the concatenation recurrence
/// mu_{i+1} = (I_{2^i} + 2^i) ++ mu_i without materializing the table.
ElementRow generator(int level);

Element multiply(int level, Element a, Element b);

/// Inverse of every element of G_i, found by scanning each table row for the
/// identity. Cached per level.
const std::vector<Element>& inverses(int level);

/// (x, mu.x, mu^2.x, ..., mu^{2^i - 1}.x).
ElementRow orbit(int level, Element x);

/// Orbit of the identity together with its position lookup, shared per level.
/// position[orbit[p]] == p.
struct OrbitIndex {
  int level = 0;
  std::vector<Element> sequence;
  std::vector<std::uint32_t> position;
};

const OrbitIndex& cached_orbit(int level);

/// Identity sequence (0, 1, ..., n-1) with `offset` added to every entry.
ElementRow shifted_identity_sequence(std::uint64_t n, Element offset);

/// Sequence concatenation.
ElementRow concat(const ElementRow& head, const ElementRow& tail);

}  // namespace masa
