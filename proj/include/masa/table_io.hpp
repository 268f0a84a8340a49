#pragma once

#include "masa/group_tower.hpp"

#include <ostream>

namespace masa {

/// Row-major decimal CSV, one table row per line, no trailing newline after
/// the last row.
template <typename Derived>
void write_csv(std::ostream& out, const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r > 0) out << '\n';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << static_cast<unsigned long long>(m(r, c));
    }
  }
}

/// Binary P5 graymap. Each cell e maps to floor(255 * e / max_value); a zero
/// max_value renders black.
template <typename Derived>
void write_pgm(std::ostream& out, const Eigen::MatrixBase<Derived>& m, unsigned long long max_value) {
  out << "P5\n" << m.cols() << ' ' << m.rows() << "\n255\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto e = static_cast<unsigned long long>(m(r, c));
      const unsigned long long gray = max_value == 0 ? 0 : (255ULL * e) / max_value;
      out.put(static_cast<char>(static_cast<unsigned char>(gray)));
    }
  }
}

}  // namespace masa
