#pragma once

#include "orecalc/morphisms.hpp"
#include "orecalc/presentation.hpp"
#include "orecalc/report.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orecalc {

class InvalidOreSpec : public Error {
public:
  using Error::Error;
};

// Data for A[x; alpha, delta]: the base presentation, the new generator and
// the twist/derivation pair acting on the base.
struct OreSpec {
  Presentation base;
  std::string new_generator;
  Endomorphism twist;
  AlphaDerivation derivation;
};

// A[x; alpha, delta] presented by x*a -> alpha(a)*x + delta(a) for each base
// generator a. x is ordered after every base generator, so normal words are
// (base normal word)*x^k.
class OreExtension {
public:
  // Validates the twist against the base relations, the derivation's
  // alpha-Leibniz compatibility with them, and the degree conditions.
  static OreExtension build(const OreSpec& spec);

  const std::string& name() const { return extended_.name(); }
  const Presentation& presentation() const { return extended_; }
  const Presentation& base() const { return base_; }
  Letter variable() const { return variable_; }
  const Endomorphism& twist() const { return twist_; }
  const AlphaDerivation& derivation() const { return derivation_; }

  Element normalize(const Element& a, const RewriteOptions& options = {}) const {
    return rewrite_normal_form(extended_, a, options);
  }

  // Base element viewed inside the extension.
  Element lift(const Element& base_element) const {
    return relabel(base_element, extended_.alphabet());
  }

  // The twist extended to the whole algebra by alpha(x) = x. Only used for
  // skew commutators; it is not required to respect the new relations.
  Endomorphism twist_on_extension() const;

private:
  OreExtension(Presentation base, Presentation extended, Letter variable, Endomorphism twist,
               AlphaDerivation derivation)
      : base_(std::move(base)),
        extended_(std::move(extended)),
        variable_(variable),
        twist_(std::move(twist)),
        derivation_(std::move(derivation)) {}

  Presentation base_;
  Presentation extended_;
  Letter variable_;
  Endomorphism twist_;
  AlphaDerivation derivation_;
};

Element ore_normalize(const OreExtension& ext, const Element& a,
                      const RewriteOptions& options = {});

// Polynomial ring over `base` in one more central generator.
Presentation adjoin_central(const Presentation& base, const std::string& generator);

// Presentation with every pair of generators commuting.
Presentation commutative_presentation(std::string name, const AlphabetPtr& alphabet);

// Per-level choice for a skewed Weyl tower. Images are given by generator
// name over the level's base A_{n-1}[t_n]; unlisted generators keep the
// classical choice (alpha = id, delta(t_n) = 1, delta = 0 elsewhere).
struct TowerLevel {
  std::vector<std::pair<std::string, Element>> twist;
  std::vector<std::pair<std::string, Element>> derivation;
};

// A_n = A_1(A_{n-1}): level n adjoins a central t_n to A_{n-1}, then an Ore
// variable x_n. Generators are ordered t1 < x1 < t2 < x2 < ...
class WeylTower {
public:
  std::size_t height() const { return levels_.size(); }
  const OreExtension& level(std::size_t n) const { return levels_.at(n - 1); }
  const Presentation& presentation() const { return levels_.back().presentation(); }
  Element normalize(const Element& a, const RewriteOptions& options = {}) const {
    return levels_.back().normalize(a, options);
  }

  friend WeylTower build_weyl_tower(std::size_t height,
                                    std::span<const std::optional<TowerLevel>> levels,
                                    Ring ring);

private:
  std::vector<OreExtension> levels_;
};

// Alphabet of the level-n base A_{n-1}[t_n], for building TowerLevel images.
AlphabetPtr weyl_tower_base_alphabet(std::size_t level, Ring ring);

WeylTower build_weyl_tower(std::size_t height,
                           std::span<const std::optional<TowerLevel>> levels = {},
                           Ring ring = Ring::Rational);

// Resolves every overlap c*b*a (c > b > a, both pairs ruled) two ways and
// compares normal forms: the diamond-lemma test for a pair-rule system.
Report check_overlaps(const Presentation& p);

// Checks that span(V), truncated at degree `cap` and closed under products of
// V elements, absorbs the Ore variable: x*w - alpha(w)*x = delta(w) lands in
// the span for every w. A failure carries the witness pair (x, w).
Report holomorph_split_check(const OreExtension& ext, std::span<const Element> generating_set,
                             unsigned cap = 3);

}  // namespace orecalc
