#pragma once

#include "orecalc/lie.hpp"
#include "orecalc/morphisms.hpp"
#include "orecalc/presentation.hpp"
#include "orecalc/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orecalc {

// One canonical pair: p*l - alpha(l)*p = -i*eta*hbar.
struct CcrPair {
  std::string p;
  std::string l;
  int eta = 1;
};

// Algebra with a star structure and a twist. hbar is a central hermitian
// generator. Generators are fixed by the adjoint unless an adjoint image is
// declared for them.
struct StarAlgebraContext {
  Presentation algebra;
  std::vector<CcrPair> pairs;
  std::string hbar = "hbar";
  std::vector<bool> hermitian;                       // by generator index
  std::vector<std::optional<Element>> adjoint_images;  // for non-hermitian generators
  Endomorphism twist;
  std::optional<Metric> metric;  // set for the four-pair contexts
};

// Generators hbar < l... < p..., one Ore extension per p: the twist acts on the
// matching l only, and delta(l_k) = -i eta_k hbar. Every generator is
// hermitian. `twist_images` lists alpha on generators by name; unlisted
// generators are fixed.
StarAlgebraContext make_ccr_context(std::string name, std::vector<CcrPair> pairs,
                                    const std::vector<std::pair<std::string, Element>>& twist_images,
                                    std::optional<Metric> metric = std::nullopt,
                                    std::string twist_name = "alpha");

// Twist images over an alphabet holding the context's generators.
std::vector<std::pair<std::string, Element>> parity_images(const AlphabetPtr& alphabet,
                                                           const std::vector<CcrPair>& pairs);

// Built-in contexts: one pair (p, l) or four pairs (p0..p3, l0..l3) with the
// metric; skewed ones use parity l -> -l, p -> -p.
StarAlgebraContext ccr_context();
StarAlgebraContext skewccr_context();
StarAlgebraContext ccr4_context(const Metric& eta = kMostlyMinus);
StarAlgebraContext skewccr4_context(const Metric& eta = kMostlyMinus);
// alpha(l) = i*l: not compatible with the adjoint.
StarAlgebraContext badtwist_context();

// Antilinear anti-automorphism: words reversed, coefficients conjugated.
Element adjoint(const StarAlgebraContext& ctx, const Element& a);
// Same on a bare alphabet: hermitian generators are fixed, the others use
// their declared image. Throws when a generator has neither.
Element adjoint(const AlphabetPtr& alphabet, const std::vector<bool>& hermitian,
                const std::vector<std::optional<Element>>& images, const Element& a);

Element normalize(const StarAlgebraContext& ctx, const Element& a);

// p*l - alpha(l)*p + i*eta*hbar as a free-algebra element.
Element skew_ccr_residual(const StarAlgebraContext& ctx, std::size_t pair = 0);

// adj(p*l - alpha(l)*p) = l*p - p*alpha(l) in the free algebra, provided
// alpha commutes with the adjoint on generators.
Report asym_conjugate_check(const StarAlgebraContext& ctx);

// L_{mu nu} = -i(l_mu p_nu - p_mu l_nu) for mu != nu, zero on the diagonal.
Element ccr_lorentz(const StarAlgebraContext& ctx, int mu, int nu);

// Normal forms of every L_{mu nu} agree with the unskewed context, while the
// same-index products p_k l_k do not.
Report bilinear_invariance_check(const StarAlgebraContext& ctx);

// [L_{mu nu}, L_{alpha beta}] against the so(1,3) brackets with each L scaled
// by -i*hbar, for every pair of index pairs.
Report lorentz_closure_check(const StarAlgebraContext& ctx);

// Full report behind the check-skew-ccr command.
Report skew_ccr_report(const StarAlgebraContext& ctx);

}  // namespace orecalc
