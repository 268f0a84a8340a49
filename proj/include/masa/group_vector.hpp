#pragma once

// Finitely supported vectors of l^2(G_i) and the left regular representation.

#include "masa/error.hpp"
#include "masa/group_tower.hpp"

#include <Eigen/SparseCore>

#include <cmath>
#include <complex>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>

namespace masa {

inline constexpr double kZeroThreshold = 1e-15;

using Support = std::set<Element>;

/// Element of l^2(G_i) with finite support, held in normal form: every stored
/// amplitude has magnitude above kZeroThreshold.
template <typename Scalar>
class GroupVector {
 public:
  using Storage = Eigen::SparseVector<Scalar>;
  using Real = typename Eigen::NumTraits<Scalar>::Real;

  GroupVector() : GroupVector(0) {}

  explicit GroupVector(int level) : level_(level), data_(checked_size(level)) {}

  GroupVector(int level, std::initializer_list<std::pair<Element, Scalar>> terms) : GroupVector(level) {
    for (const auto& [g, a] : terms) add(g, a);
  }

  /// Point mass delta_g.
  static GroupVector delta(int level, Element g) {
    GroupVector v(level);
    v.add(g, Scalar(1));
    return v;
  }

  int level() const { return level_; }
  const Storage& data() const { return data_; }

  Scalar operator[](Element g) const {
    require(g);
    return data_.coeff(static_cast<Eigen::Index>(g));
  }

  /// Adds `a` to the amplitude of g and restores normal form at g.
  void add(Element g, Scalar a) {
    require(g);
    const Scalar updated = data_.coeff(static_cast<Eigen::Index>(g)) + a;
    set(g, updated);
  }

  void set(Element g, Scalar a) {
    require(g);
    const auto idx = static_cast<Eigen::Index>(g);
    if (std::abs(a) <= kZeroThreshold) {
      if (data_.coeff(idx) != Scalar(0)) {
        data_.coeffRef(idx) = Scalar(0);
        prune();
      }
      return;
    }
    data_.coeffRef(idx) = a;
  }

  std::size_t nonzeros() const { return static_cast<std::size_t>(data_.nonZeros()); }

  /// Calls f(element, amplitude) in ascending element order.
  template <typename F>
  void for_each(F&& f) const {
    for (typename Storage::InnerIterator it(data_); it; ++it) {
      f(static_cast<Element>(it.index()), it.value());
    }
  }

  GroupVector& operator*=(Scalar s) {
    data_ *= s;
    prune();
    return *this;
  }

  friend GroupVector operator*(Scalar s, GroupVector v) { return v *= s; }

  friend GroupVector operator+(const GroupVector& a, const GroupVector& b) {
    a.same_level(b);
    GroupVector out(a.level_);
    out.data_ = a.data_ + b.data_;
    out.prune();
    return out;
  }

  friend GroupVector operator-(const GroupVector& a, const GroupVector& b) {
    a.same_level(b);
    GroupVector out(a.level_);
    out.data_ = a.data_ - b.data_;
    out.prune();
    return out;
  }

  friend bool operator==(const GroupVector& a, const GroupVector& b) {
    if (a.level_ != b.level_ || a.data_.nonZeros() != b.data_.nonZeros()) return false;
    typename Storage::InnerIterator ia(a.data_), ib(b.data_);
    for (; ia && ib; ++ia, ++ib) {
      if (ia.index() != ib.index() || ia.value() != ib.value()) return false;
    }
    return true;
  }

  void same_level(const GroupVector& other) const {
    if (level_ != other.level_) {
      throw DomainError("level mismatch: G_" + std::to_string(level_) + " vs G_" + std::to_string(other.level_));
    }
  }

 private:
  static Eigen::Index checked_size(int level) {
    if (level < 0 || level > kOrbitLevelCeiling) {
      throw ResourceLimitError("no l^2(G_i) vectors at level " + std::to_string(level));
    }
    return static_cast<Eigen::Index>(group_order(level));
  }

  void require(Element g) const {
    if (g >= group_order(level_)) {
      throw DomainError("element " + std::to_string(g) + " is not in G_" + std::to_string(level_));
    }
  }

  void prune() {
    data_.prune(Scalar(1), Real(kZeroThreshold));
  }

  int level_;
  Storage data_;
};

using GroupVectorXcd = GroupVector<std::complex<double>>;
using GroupVectorXd = GroupVector<double>;

template <typename Scalar>
Support support(const GroupVector<Scalar>& v) {
  Support s;
  v.for_each([&](Element g, const Scalar&) { s.insert(g); });
  return s;
}

/// sum_g a(g) * conj(b(g)).
template <typename Scalar>
Scalar inner(const GroupVector<Scalar>& a, const GroupVector<Scalar>& b) {
  a.same_level(b);
  Scalar sum(0);
  typename GroupVector<Scalar>::Storage::InnerIterator ia(a.data()), ib(b.data());
  while (ia && ib) {
    if (ia.index() < ib.index()) {
      ++ia;
    } else if (ib.index() < ia.index()) {
      ++ib;
    } else {
      sum += ia.value() * Eigen::numext::conj(ib.value());
      ++ia;
      ++ib;
    }
  }
  return sum;
}

template <typename Scalar>
typename GroupVector<Scalar>::Real norm(const GroupVector<Scalar>& a) {
  return a.data().norm();
}

/// tr(a) = a(identity).
template <typename Scalar>
Scalar trace(const GroupVector<Scalar>& a) {
  return a[0];
}

/// lambda_g: amplitude of h moves to g.h.
template <typename Scalar>
GroupVector<Scalar> left_translate(int level, Element g, const GroupVector<Scalar>& v) {
  if (v.level() != level) {
    throw DomainError("left_translate: vector at G_" + std::to_string(v.level()) + ", operator at G_" +
                      std::to_string(level));
  }
  const GroupTable& table = cached_table(level);
  if (g >= group_order(level)) {
    throw DomainError("element " + std::to_string(g) + " is not in G_" + std::to_string(level));
  }
  GroupVector<Scalar> out(level);
  v.for_each([&](Element h, const Scalar& a) { out.set(table(g, h), a); });
  return out;
}

/// (a * b)(g) = sum_h a(h) b(h^{-1} g).
template <typename Scalar>
GroupVector<Scalar> convolve(int level, const GroupVector<Scalar>& a, const GroupVector<Scalar>& b) {
  if (a.level() != level || b.level() != level) throw DomainError("convolve: level mismatch");
  const GroupTable& table = cached_table(level);
  const std::vector<Element>& inv = inverses(level);
  GroupVector<Scalar> out(level);
  for (Element g = 0; g < group_order(level); ++g) {
    Scalar sum(0);
    a.for_each([&](Element h, const Scalar& ah) { sum += ah * b[table(inv[h], g)]; });
    out.set(g, sum);
  }
  return out;
}

/// k-fold left translation by the generator 2^{i-1}, done as a shift of orbit
/// positions. Needs no dense table, so it works beyond the table limit.
template <typename Scalar>
GroupVector<Scalar> generator_power(int level, std::uint64_t k, const GroupVector<Scalar>& v) {
  if (v.level() != level) {
    throw DomainError("generator_power: vector at G_" + std::to_string(v.level()) + ", operator at G_" +
                      std::to_string(level));
  }
  if (level == 0) return v;
  const OrbitIndex& orbit = cached_orbit(level);
  const std::uint64_t n = orbit.sequence.size();
  const std::uint64_t shift = k % n;
  GroupVector<Scalar> out(level);
  v.for_each([&](Element h, const Scalar& a) {
    out.set(orbit.sequence[(orbit.position[h] + shift) % n], a);
  });
  return out;
}

}  // namespace masa
