#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ncplay/errors.hpp"

namespace ncplay {

/// Point in d-dimensional Euclidean space. Dimension is fixed per scenario;
/// all arithmetic requires matching dimensions.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim, double fill = 0.0) : c_(dim, fill) {}
  Vec(std::initializer_list<double> coords) : c_(coords) {}
  explicit Vec(std::vector<double> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  const std::vector<double>& coords() const { return c_; }

  bool finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

 private:
  std::vector<double> c_;
};

inline void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * a[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline double distance(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

/// Unit vector along a. Throws on (numerically) zero input.
inline Vec normalized(const Vec& a) {
  const double n = norm(a);
  if (n == 0.0) throw Error("cannot normalize zero vector");
  return (1.0 / n) * a;
}

}  // namespace ncplay
