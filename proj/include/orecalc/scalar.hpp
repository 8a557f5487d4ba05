#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace orecalc {

// Ground ring of an algebra: the rationals or the Gaussian rationals Q(i).
enum class Ring { Rational, Gaussian };

std::string_view ring_name(Ring ring);  // "Q" or "Qi"
Ring parse_ring(std::string_view name);

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
  using Error::Error;
};

class ScalarSyntaxError : public Error {
public:
  using Error::Error;
};

// Exact element of Q or Q(i). Real and imaginary parts are kept as two
// independently reduced fractions; a Rational scalar always has im == 0.
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(Ring ring, mpq_class re = 0, mpq_class im = 0);

  static Scalar rational(const mpq_class& value) { return Scalar(Ring::Rational, value); }
  static Scalar gaussian(const mpq_class& re, const mpq_class& im) {
    return Scalar(Ring::Gaussian, re, im);
  }
  static Scalar from_int(Ring ring, long value) { return Scalar(ring, value); }
  static Scalar imaginary_unit() { return Scalar(Ring::Gaussian, 0, 1); }

  Ring ring() const { return ring_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  // Same value viewed in a (possibly larger) ring. Q -> Qi always works;
  // Qi -> Q only for real values.
  Scalar in(Ring ring) const;

  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Canonical text: "3/2", "-7", "i", "-1/2*i", "(1/2-3*i)".
  std::string to_string() const;
  static Scalar parse(std::string_view text, Ring ring);

private:
  void require_same_ring(const Scalar& other) const;

  Ring ring_ = Ring::Rational;
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

}  // namespace orecalc
