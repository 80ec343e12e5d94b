#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace sphroots {

/// Integer coordinate vector tagged by what its coordinates mean.
template <class Tag>
class IntVector {
 public:
  IntVector() = default;
  IntVector(std::initializer_list<int> xs) : c_(xs) {}
  explicit IntVector(std::vector<int> xs) : c_(std::move(xs)) {}

  static IntVector zero(std::size_t n) { return IntVector(std::vector<int>(n, 0)); }
  static IntVector unit(std::size_t n, std::size_t i) {
    IntVector v = zero(n);
    v.c_[i] = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<int>& values() const { return c_; }

  bool is_zero() const {
    for (int x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (int x : c_)
      if (x < 0) return false;
    return true;
  }
  int sum() const {
    int s = 0;
    for (int x : c_) s += x;
    return s;
  }

  IntVector& operator+=(const IntVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator-(IntVector a) {
    for (int& x : a.c_) x = -x;
    return a;
  }
  friend IntVector operator*(int k, IntVector a) {
    for (int& x : a.c_) x *= k;
    return a;
  }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.c_.size(); ++i) os << (i ? "," : "") << v.c_[i];
    return os << ')';
  }

 private:
  std::vector<int> c_;
};

struct WeightTag;
struct CRootTag;

/// Element of the root lattice, coefficients on the simple roots.
using Weight = IntVector<WeightTag>;
/// Coefficients of a root on the simple roots outside the Levi.
using CRoot = IntVector<CRootTag>;

/// Sorted 0-based node indices.
using IndexSet = std::vector<int>;

struct IntVectorHash {
  template <class Tag>
  std::size_t operator()(const IntVector<Tag>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
    return h;
  }
};

}  // namespace sphroots
