#pragma once

#include <string>

#include "lme/numeric.hpp"

namespace lme {

/// Exact complex number a + bi with rational a, b.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3/2", "-i", "1/2+3i".
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace lme
