#include "orecalc/scalar.hpp"

#include <cctype>

namespace orecalc {

std::string_view ring_name(Ring ring) {
  return ring == Ring::Rational ? "Q" : "Qi";
}

Ring parse_ring(std::string_view name) {
  if (name == "Q") return Ring::Rational;
  if (name == "Qi") return Ring::Gaussian;
  throw Error("unknown ground ring '" + std::string(name) + "' (expected Q or Qi)");
}

Scalar::Scalar(Ring ring, mpq_class re, mpq_class im)
    : ring_(ring), re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
  if (ring_ == Ring::Rational && sgn(im_) != 0)
    throw RingMismatch("imaginary part in a rational scalar");
}

void Scalar::require_same_ring(const Scalar& other) const {
  if (ring_ != other.ring_)
    throw RingMismatch("ring mismatch: " + std::string(ring_name(ring_)) + " vs " +
                       std::string(ring_name(other.ring_)));
}

Scalar Scalar::in(Ring ring) const {
  if (ring == ring_) return *this;
  if (ring == Ring::Rational && sgn(im_) != 0)
    throw RingMismatch("cannot view " + to_string() + " as a rational");
  Scalar out = *this;
  out.ring_ = ring;
  return out;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  out.im_ = -out.im_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(ring_, re_ / norm, -im_ / norm);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_ring(other);
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_ring(other);
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_ring(other);
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

std::string imag_text(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "*i";
}

}  // namespace

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  std::string out = "(" + re_.get_str();
  std::string im = imag_text(im_);
  if (im.front() != '-') out += '+';
  return out + im + ")";
}

namespace {

class ScalarReader {
public:
  explicit ScalarReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  // [-]digits[/digits]
  bool fraction(mpq_class& out) {
    std::size_t start = pos_;
    if (peek('-')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      return false;
    }
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (eat('/')) {
      std::size_t d0 = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == d0) fail("missing denominator");
      den = std::string(text_.substr(d0, pos_ - d0));
    }
    mpz_class n(num), d(den);
    if (d == 0) fail("zero denominator");
    out = mpq_class(n, d);
    out.canonicalize();
    return true;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ScalarSyntaxError("bad scalar '" + std::string(text_) + "': " + why);
  }

  // Parses "i", "-i", "q*i", "q" and reports whether the term is imaginary.
  void term(mpq_class& value, bool& imaginary) {
    imaginary = false;
    if (eat('-')) {
      if (eat('i')) {
        value = -1;
        imaginary = true;
        return;
      }
      --pos_;
    }
    if (eat('i')) {
      value = 1;
      imaginary = true;
      return;
    }
    if (!fraction(value)) fail("expected a number");
    if (eat('*')) {
      if (!eat('i')) fail("expected 'i' after '*'");
      imaginary = true;
    }
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, Ring ring) {
  ScalarReader in(text);
  mpq_class re = 0, im = 0;
  if (in.eat('(')) {
    mpq_class a, b;
    bool a_imag = false, b_imag = false;
    in.term(a, a_imag);
    if (a_imag) in.fail("real part must come first");
    if (!in.eat('+') && !in.peek('-')) in.fail("expected '+' or '-'");
    if (in.peek('+')) in.fail("doubled sign");
    in.term(b, b_imag);
    if (!b_imag) in.fail("imaginary part expected");
    if (!in.eat(')')) in.fail("expected ')'");
    re = a;
    im = b;
  } else {
    bool imaginary = false;
    mpq_class v;
    in.term(v, imaginary);
    (imaginary ? im : re) = v;
  }
  if (!in.done()) in.fail("trailing characters");
  if (ring == Ring::Rational && sgn(im) != 0)
    throw RingMismatch("imaginary scalar '" + std::string(text) + "' in ground ring Q");
  return Scalar(ring, re, im);
}

}  // namespace orecalc
