#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <vector>

namespace lvhg {

inline constexpr int kMaxDim = 3;

/// Fixed-capacity vector for state-space points, d <= 3.
/// Inline storage keeps simulation loops allocation-free.
struct Vec {
  std::array<double, kMaxDim> c{};
  int d = 0;

  Vec() = default;
  explicit Vec(int dim) : d(dim) { assert(dim >= 1 && dim <= kMaxDim); }
  Vec(std::initializer_list<double> xs) : d(static_cast<int>(xs.size())) {
    assert(d >= 1 && d <= kMaxDim);
    int i = 0;
    for (double x : xs) c[i++] = x;
  }
  static Vec zero(int dim) { return Vec(dim); }
  static Vec unit(int dim, int axis) {
    Vec v(dim);
    v.c[axis] = 1.0;
    return v;
  }
  static Vec from(const std::vector<double>& xs) {
    Vec v(static_cast<int>(xs.size()));
    for (int i = 0; i < v.d; ++i) v.c[i] = xs[i];
    return v;
  }
  std::vector<double> to_vector() const { return {c.begin(), c.begin() + d}; }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < d; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < d; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < d; ++i) c[i] *= s;
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  double dot(const Vec& o) const {
    double s = 0;
    for (int i = 0; i < d; ++i) s += c[i] * o.c[i];
    return s;
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  double inf_norm() const {
    double s = 0;
    for (int i = 0; i < d; ++i) s = std::max(s, std::abs(c[i]));
    return s;
  }
  Vec normalized() const {
    Vec v = *this;
    double n = norm();
    if (n > 0) v *= 1.0 / n;
    return v;
  }
};

/// Row-major d x d matrix, d <= 3.
struct Mat {
  std::array<double, kMaxDim * kMaxDim> a{};
  int d = 0;

  Mat() = default;
  explicit Mat(int dim) : d(dim) { assert(dim >= 1 && dim <= kMaxDim); }
  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat diagonal(const Vec& v) {
    Mat m(v.d);
    for (int i = 0; i < v.d; ++i) m(i, i) = v[i];
    return m;
  }

  double& operator()(int i, int j) { return a[i * kMaxDim + j]; }
  double operator()(int i, int j) const { return a[i * kMaxDim + j]; }

  Vec operator*(const Vec& v) const {
    Vec r(d);
    for (int i = 0; i < d; ++i) {
      double s = 0;
      for (int j = 0; j < d; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
  Mat operator*(const Mat& o) const {
    Mat r(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0;
        for (int k = 0; k < d; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  Mat transpose() const {
    Mat r(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  double det() const {
    switch (d) {
      case 1:
        return a[0];
      case 2:
        return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
      default: {
        const Mat& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
      }
    }
  }

  /// Inverse by cofactors; caller checks det() != 0 first.
  Mat inverse() const {
    Mat r(d);
    double dt = det();
    switch (d) {
      case 1:
        r(0, 0) = 1.0 / dt;
        break;
      case 2:
        r(0, 0) = (*this)(1, 1) / dt;
        r(0, 1) = -(*this)(0, 1) / dt;
        r(1, 0) = -(*this)(1, 0) / dt;
        r(1, 1) = (*this)(0, 0) / dt;
        break;
      default: {
        const Mat& m = *this;
        r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / dt;
        r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / dt;
        r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / dt;
        r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / dt;
        r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / dt;
        r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / dt;
        r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / dt;
        r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / dt;
        r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / dt;
      }
    }
    return r;
  }

  /// Largest/smallest singular values by cyclic Jacobi on M^T M.
  /// Used for condition checks, never in simulation loops.
  std::pair<double, double> singular_value_range() const {
    Mat g = transpose() * (*this);
    for (int sweep = 0; sweep < 32; ++sweep) {
      double off = 0;
      for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) off += g(p, q) * g(p, q);
      if (off < 1e-30) break;
      for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
          if (std::abs(g(p, q)) < 1e-300) continue;
          double theta = 0.5 * std::atan2(2 * g(p, q), g(q, q) - g(p, p));
          double cth = std::cos(theta), sth = std::sin(theta);
          Mat rot = Mat::identity(d);
          rot(p, p) = cth;
          rot(q, q) = cth;
          rot(p, q) = sth;
          rot(q, p) = -sth;
          g = rot.transpose() * g * rot;
        }
    }
    double lo = g(0, 0), hi = g(0, 0);
    for (int i = 1; i < d; ++i) {
      lo = std::min(lo, g(i, i));
      hi = std::max(hi, g(i, i));
    }
    return {std::sqrt(std::max(hi, 0.0)), std::sqrt(std::max(lo, 0.0))};
  }
  double operator_norm() const { return singular_value_range().first; }
};

}  // namespace lvhg
