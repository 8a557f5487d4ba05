#pragma once

#include "orecalc/lie.hpp"
#include "orecalc/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orecalc {

// Dense square matrix with exact entries.
class RepMatrix {
public:
  RepMatrix(std::size_t dim, Ring ring);

  static RepMatrix identity(std::size_t dim, Ring ring);

  std::size_t dim() const { return dim_; }
  Ring ring() const { return ring_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  bool is_zero() const;

  RepMatrix& operator+=(const RepMatrix& other);
  RepMatrix& operator-=(const RepMatrix& other);
  RepMatrix scaled(const Scalar& c) const;
  friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
  friend RepMatrix operator-(RepMatrix a, const RepMatrix& b) { return a -= b; }
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  friend bool operator==(const RepMatrix& a, const RepMatrix& b);

  // Rows in brackets: "[[1, 0], [0, -i]]".
  std::string to_string() const;

private:
  void require_compatible(const RepMatrix& other) const;

  std::size_t dim_;
  Ring ring_;
  std::vector<Scalar> entries_;
};

RepMatrix matrix_commutator(const RepMatrix& a, const RepMatrix& b);

// Generator images, indexed like the alphabet. Missing images are allowed
// until something is evaluated on them.
struct Representation {
  std::string name;
  AlphabetPtr alphabet;
  std::size_t dim = 0;
  std::vector<std::optional<RepMatrix>> images;
};

// Word -> product of images, extended linearly; the empty word is the
// identity. Throws on a missing image or a dimension mismatch.
RepMatrix evaluate_serial(const Representation& rep, const Element& a);
// Same result with terms evaluated on OpenMP threads.
RepMatrix evaluate(const Representation& rep, const Element& a);

// evaluate([g_i, g_j] symbolic) = matrix commutator, for every pair.
Report rep_validate(const Representation& rep, const LiePresentation& p);

// evaluate(a) = evaluate(pbw_normal_form(a)).
Report pbw_oracle_equivalence(const LiePresentation& p, const Representation& rep, const Element& a);

// `count` pseudo-random words of length 1..max_degree from a fixed seed.
std::vector<Element> random_words(const AlphabetPtr& alphabet, std::size_t count,
                                   std::size_t max_degree, std::uint64_t seed);

// pbw_oracle_equivalence on random words, checked in parallel.
Report pbw_oracle_suite(const LiePresentation& p, const Representation& rep, std::size_t count = 200,
                        std::size_t max_degree = 4, std::uint64_t seed = 20240101);

// evaluate([A, g]) = A g - g A for every generator g.
Report ad_check(const Representation& rep, const LiePresentation& p, Letter a);

// evaluate(ab) = evaluate(a) evaluate(b) and evaluate(a+b) = evaluate(a) + evaluate(b).
Report morphism_check(const Representation& rep, std::size_t count = 50, std::uint64_t seed = 7);

// (L_{mu nu})^rho_sigma = i(eta_{mu sigma} delta^rho_nu - eta_{nu sigma} delta^rho_mu).
Representation vector_rep(const LiePresentation& so13);
// 5x5 affine matrices: L in the upper-left block, P_rho the translation by e_rho.
Representation affine_rep(const LiePresentation& iso13);
// Images of another basis through a map into an already represented algebra.
Representation transported_rep(std::string name, const Representation& rep, const RingMap& to_rep_basis);

// Shipped representation for a built-in presentation (so13, so13jk, su2su2,
// iso13); nullopt for anything else.
std::optional<Representation> shipped_rep(const LiePresentation& p);

// Everything the oracle command prints: rep validity, ad maps, the random
// PBW suite and the morphism property.
Report oracle_report(const LiePresentation& p, const Representation& rep);

}  // namespace orecalc
