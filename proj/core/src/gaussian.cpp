#include "hmlift/gaussian.hpp"

#include <ostream>

#include "hmlift/error.hpp"

namespace hmlift {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag_part;
  if (im_ == Rational(1)) {
    imag_part = "i";
  } else if (im_ == Rational(-1)) {
    imag_part = "-i";
  } else {
    imag_part = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return imag_part;
  if (im_.sign() > 0) return re_.to_string() + "+" + imag_part;
  return re_.to_string() + imag_part;
}

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
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "gaussian rational division by zero");
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace hmlift
