#pragma once

#include "orecalc/morphisms.hpp"
#include "orecalc/presentation.hpp"
#include "orecalc/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orecalc {

// Diagonal Minkowski metric eta_{mu mu}.
using Metric = std::array<int, 4>;
inline constexpr Metric kMostlyMinus{1, -1, -1, -1};
inline constexpr Metric kMostlyPlus{-1, 1, 1, 1};

std::string metric_to_string(const Metric& eta);  // "+---"
Metric parse_metric(std::string_view text);

class InvalidPresentation : public Error {
public:
  using Error::Error;
};

struct BracketEntry {
  Letter left;
  Letter right;
  Element value;  // [g_left, g_right], degree <= 1
};

// Lie algebra given by structure constants, presented as its universal
// enveloping algebra: g_j g_i -> g_i g_j + [g_j, g_i] for j > i.
class LiePresentation {
public:
  // Missing pairs bracket to zero. Throws InvalidPresentation when a value
  // has degree > 1, antisymmetric entries disagree, or Jacobi fails.
  LiePresentation(std::string name, AlphabetPtr alphabet, const std::vector<BracketEntry>& brackets,
                  std::optional<Metric> metric = std::nullopt);

  const std::string& name() const { return presentation_.name(); }
  const AlphabetPtr& alphabet() const { return presentation_.alphabet(); }
  const Presentation& presentation() const { return presentation_; }
  const std::optional<Metric>& metric() const { return metric_; }
  std::size_t dimension() const { return alphabet()->size(); }

  Element gen(std::string_view n) const { return presentation_.gen(n); }
  Element bracket(Letter a, Letter b) const;
  // Bilinear extension to elements of degree <= 1; constants are central.
  Element bracket(const Element& a, const Element& b) const;

  // All nonzero [g_i, g_j] with i < j.
  std::vector<BracketEntry> nonzero_brackets() const;

  // Jacobi residual of every generator triple, normalized.
  Report jacobi_report() const;

private:
  Presentation presentation_;
  std::vector<Element> table_;  // [a * n + b]
  std::optional<Metric> metric_;
};

// Normal form in the universal enveloping algebra (PBW-ordered words).
Element pbw_normal_form(const LiePresentation& p, const Element& a);

// --- Lorentz and Poincare ---------------------------------------------------

std::string lorentz_name(int mu, int nu);  // "L01" for mu < nu

// L_{mu nu} as an element, with L_{nu mu} = -L_{mu nu} and L_{mu mu} = 0.
Element lorentz_generator(const AlphabetPtr& alphabet, int mu, int nu);

// [L_{mu nu}, L_{alpha beta}] = i{eta_{mu alpha} L_{nu beta} + eta_{nu beta} L_{mu alpha}
//                                - eta_{mu beta} L_{nu alpha} - eta_{nu alpha} L_{mu beta}}
Element lorentz_bracket(const AlphabetPtr& alphabet, std::array<int, 2> mu_nu,
                        std::array<int, 2> alpha_beta, const Metric& eta = kMostlyMinus);

// so(1,3) on L01 < L02 < L03 < L12 < L13 < L23.
LiePresentation so13(const Metric& eta = kMostlyMinus);
// iso(1,3) = so(1,3) with translations P0..P3 appended; [P, P] = 0 and
// [L_{mu nu}, P_rho] = i(eta_{mu rho} P_nu - eta_{nu rho} P_mu).
LiePresentation iso13(const Metric& eta = kMostlyMinus);
// so(1,3) in the rotation/boost basis J1 < J2 < J3 < K1 < K2 < K3.
LiePresentation so13jk(const Metric& eta = kMostlyMinus);
// su(2)+su(2) in the basis N1 < N2 < N3 < M1 < M2 < M3.
LiePresentation su2su2(const Metric& eta = kMostlyMinus);

// J_i = 1/2 eps_ijk L_jk and K_i = L_0i over an alphabet containing the L's.
Element lorentz_J(const AlphabetPtr& alphabet, int i);
Element lorentz_K(const AlphabetPtr& alphabet, int i);

class NeedsComplex : public Error {
public:
  using Error::Error;
};

// N_i = 1/2 (J_i + i K_i), M_i = 1/2 (J_i - i K_i), substituted down to the
// L generators of `target` (so13 or iso13 alphabet).
RingMap nm_to_lorentz(const AlphabetPtr& nm_alphabet, const AlphabetPtr& target);
RingMap jk_to_lorentz(const AlphabetPtr& jk_alphabet, const AlphabetPtr& target);

// Element over N_i, M_i rewritten over the L generators of so(1,3).
Element jk_decompose(const Element& nm_expression, const AlphabetPtr& lorentz_alphabet);

// --- Grading ------------------------------------------------------------------

struct GradedSlice {
  std::size_t degree = 0;
  std::vector<Word> basis;  // nondecreasing words, lexicographic
  std::uint64_t dimension = 0;
};

// C(n + m - 1, m - 1) for m generators.
std::uint64_t graded_dimension(const LiePresentation& p, std::size_t n);
std::uint64_t graded_dimension(std::size_t generators, std::size_t n);
GradedSlice graded_slice(const LiePresentation& p, std::size_t n);

// --- Casimirs -------------------------------------------------------------------

// Totally antisymmetric symbol with eps_{0123} = +1.
int levi_civita(int a, int b, int c, int d);

// P^2 = eta^{mu nu} P_mu P_nu and W_mu = 1/2 eps_{mu nu rho sigma} L^{nu rho} P^sigma.
Element poincare_p_squared(const LiePresentation& iso);
Element pauli_lubanski(const LiePresentation& iso, int mu);

// [P^2, g] = 0 and [W^2, g] = 0 for every generator g, and [W_mu, P_nu] = 0.
Report casimir_check(const LiePresentation& iso);

}  // namespace orecalc
