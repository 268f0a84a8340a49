#include "masa/group_tower.hpp"

#include "masa/error.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

namespace masa {

namespace {

constexpr int kDefaultMaxLevel = 12;

void require_table_level(int level) {
  if (level < 0) throw DomainError("negative group level " + std::to_string(level));
  const int limit = max_table_level();
  if (level > limit) {
    throw ResourceLimitError("level " + std::to_string(level) + " exceeds the dense table limit " +
                             std::to_string(limit));
  }
}

void require_orbit_level(int level) {
  if (level < 0) throw DomainError("negative group level " + std::to_string(level));
  if (level > kOrbitLevelCeiling) {
    throw ResourceLimitError("level " + std::to_string(level) + " exceeds the orbit limit " +
                             std::to_string(kOrbitLevelCeiling));
  }
}

void require_element(int level, Element x) {
  if (x >= group_order(level)) {
    throw DomainError("element " + std::to_string(x) + " is not in G_" + std::to_string(level));
  }
}

// Lazily built per-level values shared across threads.
template <typename T, std::size_t N>
class LevelCache {
 public:
  template <typename Build>
  const T& get(int level, Build&& build) {
    std::call_once(flags_[level], [&] { values_[level] = std::make_unique<const T>(build()); });
    return *values_[level];
  }

 private:
  std::array<std::once_flag, N> flags_;
  std::array<std::unique_ptr<const T>, N> values_;
};

}  // namespace

int max_table_level() {
  const char* env = std::getenv("MASA_MAX_LEVEL");
  if (env == nullptr) return kDefaultMaxLevel;
  std::string_view text(env);
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 0) {
    throw UsageError("MASA_MAX_LEVEL must be a nonnegative integer, got '" + std::string(text) + "'");
  }
  return std::min(value, kTableLevelCeiling);
}

Element generator_element(int level) {
  if (level < 1) throw DomainError("G_0 is trivial and has no generator row");
  return Element{1} << (level - 1);
}

TwistMatrix twist(int level) {
  require_table_level(level);
  TwistMatrix t = TwistMatrix::Ones(1, 1);
  for (int i = 1; i <= level; ++i) {
    const Eigen::Index half = Eigen::Index{1} << (i - 1);
    TwistMatrix next = TwistMatrix::Zero(2 * half, 2 * half);
    next.topRightCorner(half, half).setIdentity();
    next.bottomLeftCorner(half, half) = t;
    t = std::move(next);
  }
  return t;
}

std::vector<Element> twist_permutation(int level) {
  require_table_level(level);
  std::vector<Element> sigma{0};
  for (int i = 1; i <= level; ++i) {
    const Element half = Element{1} << (i - 1);
    std::vector<Element> next(2 * half);
    for (Element r = 0; r < half; ++r) {
      next[r] = half + r;
      next[half + r] = sigma[r];
    }
    sigma = std::move(next);
  }
  return sigma;
}

GroupTable group_table(int level) {
  require_table_level(level);
  GroupTable g = GroupTable::Zero(1, 1);
  for (int i = 1; i <= level; ++i) {
    const Eigen::Index half = Eigen::Index{1} << (i - 1);
    const auto sigma = twist_permutation(i - 1);
    Eigen::VectorXi inverse_sigma(half);
    for (Eigen::Index r = 0; r < half; ++r) inverse_sigma(sigma[r]) = static_cast<int>(r);
    const Eigen::PermutationMatrix<Eigen::Dynamic> rows(inverse_sigma);

    GroupTable next(2 * half, 2 * half);
    const GroupTable lifted = (g.array() + static_cast<std::uint16_t>(half)).matrix();
    next.topLeftCorner(half, half) = g;
    next.topRightCorner(half, half) = lifted;
    next.bottomLeftCorner(half, half) = lifted;
    next.bottomRightCorner(half, half) = rows * g;
    g = std::move(next);
  }
  return g;
}

const GroupTable& cached_table(int level) {
  require_table_level(level);
  static LevelCache<GroupTable, kTableLevelCeiling + 1> cache;
  return cache.get(level, [level] { return group_table(level); });
}

ElementRow shifted_identity_sequence(std::uint64_t n, Element offset) {
  ElementRow s(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < s.size(); ++k) s(k) = offset + static_cast<Element>(k);
  return s;
}

ElementRow concat(const ElementRow& head, const ElementRow& tail) {
  ElementRow out(head.size() + tail.size());
  out << head, tail;
  return out;
}

ElementRow generator(int level) {
  if (level == 0) throw DomainError("generator(0): G_0 is trivial, mu_0 = (0) has no generator role");
  require_orbit_level(level);
  ElementRow mu = ElementRow::Zero(1);
  for (int i = 0; i < level; ++i) {
    const std::uint64_t n = group_order(i);
    mu = concat(shifted_identity_sequence(n, static_cast<Element>(n)), mu);
  }
  return mu;
}

Element multiply(int level, Element a, Element b) {
  const GroupTable& table = cached_table(level);
  require_element(level, a);
  require_element(level, b);
  return table(a, b);
}

const std::vector<Element>& inverses(int level) {
  require_table_level(level);
  static LevelCache<std::vector<Element>, kTableLevelCeiling + 1> cache;
  return cache.get(level, [level] {
    const GroupTable& table = cached_table(level);
    std::vector<Element> inv(static_cast<std::size_t>(table.rows()));
    for (Eigen::Index a = 0; a < table.rows(); ++a) {
      for (Eigen::Index b = 0; b < table.cols(); ++b) {
        if (table(a, b) == 0) {
          inv[static_cast<std::size_t>(a)] = static_cast<Element>(b);
          break;
        }
      }
    }
    return inv;
  });
}

ElementRow orbit(int level, Element x) {
  require_orbit_level(level);
  require_element(level, x);
  if (level == 0) return ElementRow::Zero(1);
  const ElementRow mu = generator(level);
  ElementRow out(mu.size());
  Element current = x;
  for (Eigen::Index t = 0; t < out.size(); ++t) {
    out(t) = current;
    current = mu(current);
  }
  return out;
}

const OrbitIndex& cached_orbit(int level) {
  require_orbit_level(level);
  static LevelCache<OrbitIndex, kOrbitLevelCeiling + 1> cache;
  return cache.get(level, [level] {
    const ElementRow seq = orbit(level, 0);
    OrbitIndex index;
    index.level = level;
    index.sequence.assign(seq.data(), seq.data() + seq.size());
    index.position.resize(index.sequence.size());
    for (std::size_t p = 0; p < index.sequence.size(); ++p) {
      index.position[index.sequence[p]] = static_cast<std::uint32_t>(p);
    }
    return index;
  });
}

}  // namespace masa
