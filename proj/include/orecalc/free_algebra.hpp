#pragma once

#include "orecalc/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace orecalc {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

// Degree first, then lexicographic in generator index.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class AlgebraMismatch : public Error {
public:
  using Error::Error;
};

class UnknownGenerator : public Error {
public:
  using Error::Error;
};

// Ordered generator names plus the ground ring. The position of a name is
// its generator index and fixes the monomial order.
class Alphabet {
public:
  Alphabet(Ring ring, std::vector<std::string> names);

  Ring ring() const { return ring_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter index(std::string_view name) const;  // throws UnknownGenerator

  bool operator==(const Alphabet& other) const {
    return ring_ == other.ring_ && names_ == other.names_;
  }

private:
  Ring ring_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> lookup_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(Ring ring, std::vector<std::string> names);

// Finite linear combination of words. Zero coefficients are never stored and
// the term map is ordered by DegLex, so equality is structural.
class Element {
public:
  using Terms = std::map<Word, Scalar, DegLex>;

  explicit Element(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static Element zero(AlphabetPtr alphabet) { return Element(std::move(alphabet)); }
  static Element one(AlphabetPtr alphabet);
  static Element constant(AlphabetPtr alphabet, const Scalar& c);
  static Element generator(AlphabetPtr alphabet, Letter g);
  static Element generator(AlphabetPtr alphabet, std::string_view name);
  static Element monomial(AlphabetPtr alphabet, Word word, const Scalar& c);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  Ring ring() const { return alphabet_->ring(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  // Adds c*w in place; c is lifted into the algebra's ring.
  void add_term(const Word& w, const Scalar& c);
  void add_scaled(const Element& other, const Scalar& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;
  Element scaled(const Scalar& c) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

  void require_same_algebra(const Element& other) const;

  // Scalar in the algebra's ring built from an integer.
  Scalar scalar(long value) const { return Scalar::from_int(ring(), value); }

private:
  AlphabetPtr alphabet_;
  Terms terms_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

// Free product: words concatenate, no relations are applied.
Element free_mul(const Element& a, const Element& b);

// Maximum word length; throws on the zero element.
std::size_t filtration_degree(const Element& a);

// a*b - b*a in the free algebra.
Element commutator(const Element& a, const Element& b);

Element power(const Element& a, unsigned exponent);

// Canonical text, leading term first: "3*J1*K2 - 1/2*K1", "t^2*x^2 + 4*t*x + 2".
std::string to_string(const Element& a);
std::string word_to_string(const Alphabet& alphabet, const Word& w);

// Same element over another alphabet, matching generators by name.
Element relabel(const Element& a, const AlphabetPtr& target);

// Words with no letter larger than its successor.
bool is_nondecreasing(const Word& w);

}  // namespace orecalc
