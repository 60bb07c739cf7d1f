#include "lme/gaussian.hpp"

#include "lme/errors.hpp"

namespace lme {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

}  // namespace lme
