#pragma once

#include "orecalc/expression.hpp"
#include "orecalc/lie.hpp"
#include "orecalc/skewquant.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orecalc {

// --- Serialized form ----------------------------------------------------------
// Scalars and elements are stored as expression text so nothing is coerced
// through floating point.

inline constexpr int kSchemaVersion = 1;

struct GeneratorSpec {
  std::string name;
  bool hermitian = false;
  std::string adjoint;  // expression; empty when not declared
  bool operator==(const GeneratorSpec&) const = default;
};

struct NamedText {
  std::string name;
  std::string value;
  bool operator==(const NamedText&) const = default;
};

struct EndomorphismSpec {
  std::string name;
  std::vector<NamedText> images;  // unlisted generators are fixed
  bool antilinear = false;
  bool operator==(const EndomorphismSpec&) const = default;
};

struct BracketSpec {
  std::string left;
  std::string right;
  std::string value;
  bool operator==(const BracketSpec&) const = default;
};

struct OreExtensionSpec {
  std::string generator;
  std::vector<NamedText> twist;       // unlisted: identity
  std::vector<NamedText> derivation;  // unlisted: zero
  bool operator==(const OreExtensionSpec&) const = default;
};

struct CcrPairSpec {
  std::string p;
  std::string l;
  int eta = 1;
  bool operator==(const CcrPairSpec&) const = default;
};

struct RelationsSpec {
  std::string kind = "free";  // free | commutative | lie | ore | skew_ccr
  std::vector<BracketSpec> brackets;           // lie
  std::string base = "commutative";            // ore: free | commutative
  std::vector<OreExtensionSpec> extensions;    // ore
  std::vector<CcrPairSpec> pairs;              // skew_ccr
  std::string twist = "id";                    // skew_ccr: endomorphism name
  bool operator==(const RelationsSpec&) const = default;
};

struct AlgebraFile {
  int schema_version = kSchemaVersion;
  std::string name;
  std::string ground_ring = "Q";
  std::vector<GeneratorSpec> generators;
  std::string metric;  // "+---", "-+++" or empty
  std::vector<NamedText> definitions;
  std::vector<EndomorphismSpec> endomorphisms;
  RelationsSpec relations;
  bool operator==(const AlgebraFile&) const = default;
};

// Malformed JSON or schema violations.
class AlgebraFileError : public Error {
public:
  using Error::Error;
};

std::string print_algebra_file(const AlgebraFile& f);
AlgebraFile parse_algebra_file(std::string_view json_text);

// --- Activated algebra ----------------------------------------------------------

// A validated algebra: presentation, macros, endomorphisms and star data.
class Algebra {
public:
  // Validates Jacobi, Ore conditions and every endomorphism against the
  // relations before returning.
  static Algebra load(const AlgebraFile& file);

  const AlgebraFile& file() const { return file_; }
  const std::string& name() const { return file_.name; }
  const Presentation& presentation() const { return *presentation_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const LiePresentation* lie() const { return lie_ ? &*lie_ : nullptr; }
  const StarAlgebraContext* star() const { return star_ ? &*star_ : nullptr; }
  const RingMap* endomorphism(std::string_view name) const;
  const Element* definition(std::string_view name) const;

  Element adjoint(const Element& a) const;
  Element normalize(const Element& a) const;

  // Free-algebra element for the expression; nothing is normalized.
  Element elaborate(const Expr& e) const;
  // parse + elaborate + normalize.
  Element evaluate(std::string_view text) const;

private:
  Algebra() = default;

  AlgebraFile file_;
  AlphabetPtr alphabet_;
  std::optional<Presentation> presentation_;
  std::optional<LiePresentation> lie_;
  std::optional<StarAlgebraContext> star_;
  std::map<std::string, Element, std::less<>> definitions_;
  std::map<std::string, RingMap, std::less<>> endomorphisms_;
  std::vector<bool> hermitian_;
  std::vector<std::optional<Element>> adjoints_;
};

// --- Built-ins and persistence -----------------------------------------------------

std::vector<std::string> builtin_names();
std::optional<AlgebraFile> builtin_algebra_file(std::string_view name, const Metric& eta = kMostlyMinus);

// $ORECALC_HOME/algebras, else ~/.orecalc/algebras.
std::string algebra_store_dir();

// Built-in name, stored user algebra, or a path to a .json file.
AlgebraFile resolve_algebra_file(std::string_view name_or_path, const Metric& eta = kMostlyMinus);

// Validates, then writes the canonical file into the store. Returns its path.
std::string store_algebra(const AlgebraFile& f);

}  // namespace orecalc
