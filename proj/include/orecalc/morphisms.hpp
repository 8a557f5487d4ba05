#pragma once

#include "orecalc/presentation.hpp"
#include "orecalc/report.hpp"

#include <string>
#include <vector>

namespace orecalc {

// Algebra map fixed by generator images and extended multiplicatively.
// Linear over the ground ring, or conjugate-linear when antilinear is set
// (complex conjugation presets). An endomorphism has source == target.
class RingMap {
public:
  RingMap(std::string name, AlphabetPtr source, AlphabetPtr target,
          std::vector<Element> images, bool antilinear = false);

  static RingMap identity(AlphabetPtr alphabet, std::string name = "id");

  // Builds an endomorphism from name -> image pairs; unlisted generators map
  // to themselves.
  static RingMap from_images(std::string name, const AlphabetPtr& alphabet,
                             const std::vector<std::pair<std::string, Element>>& images,
                             bool antilinear = false);

  const std::string& name() const { return name_; }
  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  bool antilinear() const { return antilinear_; }
  bool is_endomorphism() const { return same_alphabet(source_, target_); }
  const Element& image(Letter g) const { return images_.at(g); }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& a) const;
  Element operator()(const Element& a) const { return apply(a); }

  // (*this) after inner.
  RingMap compose(const RingMap& inner) const;

  // Same map with source and target replaced by a presentation's alphabet of
  // the same generators, so it can act on that presentation's elements.
  RingMap restricted_to(const AlphabetPtr& source, const AlphabetPtr& target) const;

private:
  std::string name_;
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Element> images_;
  bool antilinear_;
};

using Endomorphism = RingMap;

// Left alpha-derivation: delta(ab) = delta(a) b + alpha(a) delta(b), fixed by
// the images of the generators. delta(1) = 0.
class AlphaDerivation {
public:
  AlphaDerivation(std::string name, Endomorphism twist, std::vector<Element> images);

  static AlphaDerivation zero(Endomorphism twist, std::string name = "0");

  const std::string& name() const { return name_; }
  const Endomorphism& twist() const { return twist_; }
  const AlphabetPtr& alphabet() const { return twist_.source(); }
  const Element& image(Letter g) const { return images_.at(g); }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& a) const;
  Element operator()(const Element& a) const { return apply(a); }

private:
  std::string name_;
  Endomorphism twist_;
  std::vector<Element> images_;
};

// a |-> a*l - l*a, the map x -> xl read as right-minus-left multiplication.
class InnerDerivation {
public:
  explicit InnerDerivation(Element l) : l_(std::move(l)) {}

  const Element& element() const { return l_; }
  Element apply(const Element& a) const { return a * l_ - l_ * a; }
  Element operator()(const Element& a) const { return apply(a); }

  // D(x) y + x D(y) - D(xy); identically zero for an inner derivation.
  Element leibniz_residual(const Element& x, const Element& y) const;

private:
  Element l_;
};

InnerDerivation inner_derivation(const Element& l);

// a*b - b*alpha(a)
Element skew_commutator_right(const Element& a, const Element& b, const Endomorphism& alpha);
// a*b - alpha(b)*a
Element skew_commutator_left(const Element& a, const Element& b, const Endomorphism& alpha);

// Checks that every defining relation of `source` maps to zero in `target`.
Report validate_ring_map(const RingMap& map, const Presentation& source,
                         const Presentation& target);
Report validate_endomorphism(const Endomorphism& alpha, const Presentation& p);

// Checks delta(r) = 0 modulo the relations for every relation r, so delta
// descends to the quotient.
Report validate_derivation(const AlphaDerivation& delta, const Presentation& p);

}  // namespace orecalc
