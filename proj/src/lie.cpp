#include "orecalc/lie.hpp"

#include "orecalc/pbw.hpp"

#include <gmpxx.h>

namespace orecalc {

std::string metric_to_string(const Metric& eta) {
  std::string out;
  for (int e : eta) out += e > 0 ? '+' : '-';
  return out;
}

Metric parse_metric(std::string_view text) {
  if (text == "mostly-minus" || text == "+---") return kMostlyMinus;
  if (text == "mostly-plus" || text == "-+++") return kMostlyPlus;
  throw Error("metric signature must be +--- or -+++, not '" + std::string(text) + "'");
}

namespace {

std::size_t degree_or_zero(const Element& a) { return a.is_zero() ? 0 : filtration_degree(a); }

Scalar half(Ring ring) { return Scalar(ring, mpq_class(1, 2)); }

}  // namespace

LiePresentation::LiePresentation(std::string name, AlphabetPtr alphabet,
                                 const std::vector<BracketEntry>& brackets,
                                 std::optional<Metric> metric)
    : presentation_(std::move(name), alphabet),
      table_(alphabet->size() * alphabet->size(), Element::zero(alphabet)),
      metric_(metric) {
  const std::size_t n = alphabet->size();
  std::vector<bool> given(n * n, false);
  for (const auto& entry : brackets) {
    if (entry.left >= n || entry.right >= n)
      throw InvalidPresentation("bracket generator out of range");
    Element v = relabel(entry.value, alphabet);
    const std::string label = "[" + alphabet->name(entry.left) + "," +
                              alphabet->name(entry.right) + "]";
    if (degree_or_zero(v) > 1)
      throw InvalidPresentation(label + " = " + to_string(v) + " has degree > 1");
    if (entry.left == entry.right) {
      if (!v.is_zero()) throw InvalidPresentation(label + " must vanish");
      continue;
    }
    const std::size_t ab = entry.left * n + entry.right;
    const std::size_t ba = entry.right * n + entry.left;
    if ((given[ab] && !(table_[ab] == v)) || (given[ba] && !(table_[ba] == -v)))
      throw InvalidPresentation(label + " is not antisymmetric");
    table_[ab] = v;
    table_[ba] = -v;
    given[ab] = given[ba] = true;
  }
  for (Letter hi = 0; hi < n; ++hi)
    for (Letter lo = 0; lo < hi; ++lo) {
      Element rhs = Element::monomial(alphabet, {lo, hi}, Scalar::from_int(alphabet->ring(), 1)) +
                    table_[hi * n + lo];
      presentation_.set_rule(hi, lo, rhs);
    }
  Report jacobi = jacobi_report();
  if (const CheckItem* bad = jacobi.first_failure())
    throw InvalidPresentation("Jacobi identity fails for " + bad->label + ": " + bad->detail);
}

Element LiePresentation::bracket(Letter a, Letter b) const {
  return table_.at(a * alphabet()->size() + b);
}

Element LiePresentation::bracket(const Element& a, const Element& b) const {
  Element x = relabel(a, alphabet()), y = relabel(b, alphabet());
  Element out = Element::zero(alphabet());
  for (const auto& [wa, ka] : x.terms()) {
    if (wa.size() > 1) throw Error("Lie bracket needs elements of degree <= 1");
    for (const auto& [wb, kb] : y.terms()) {
      if (wb.size() > 1) throw Error("Lie bracket needs elements of degree <= 1");
      if (wa.empty() || wb.empty()) continue;
      out.add_scaled(bracket(wa[0], wb[0]), ka * kb);
    }
  }
  return out;
}

std::vector<BracketEntry> LiePresentation::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  const auto n = static_cast<Letter>(alphabet()->size());
  for (Letter a = 0; a < n; ++a)
    for (Letter b = a + 1; b < n; ++b)
      if (!bracket(a, b).is_zero()) out.push_back({a, b, bracket(a, b)});
  return out;
}

Report LiePresentation::jacobi_report() const {
  Report report;
  report.title = "Jacobi identity in " + name();
  PbwNormalizer normalizer(presentation_);
  const auto n = static_cast<Letter>(alphabet()->size());
  std::size_t triples = 0;
  for (Letter a = 0; a < n; ++a)
    for (Letter b = a + 1; b < n; ++b)
      for (Letter c = b + 1; c < n; ++c) {
        // Nested brackets from the table. Associative commutators would cancel
        // identically in the free algebra and prove nothing.
        const Element ga = presentation_.gen(a), gb = presentation_.gen(b), gc = presentation_.gen(c);
        Element residual = bracket(ga, bracket(b, c)) + bracket(gb, bracket(c, a)) + bracket(gc, bracket(a, b));
        Element nf = normalizer.normalize(residual);
        ++triples;
        if (!nf.is_zero())
          report.add(alphabet()->name(a) + "," + alphabet()->name(b) + "," + alphabet()->name(c),
                     false, "residual " + to_string(nf));
      }
  report.add("generator triples with zero residual", report.failures() == 0,
             std::to_string(triples - report.failures()) + "/" + std::to_string(triples));
  return report;
}

Element pbw_normal_form(const LiePresentation& p, const Element& a) {
  constexpr std::size_t kParallelThreshold = 64;
  if (a.size() >= kParallelThreshold) return pbw_normal_form_parallel(p.presentation(), a);
  return pbw_normal_form_serial(p.presentation(), a);
}

// --- Lorentz and Poincare ---------------------------------------------------

std::string lorentz_name(int mu, int nu) {
  return "L" + std::to_string(mu) + std::to_string(nu);
}

Element lorentz_generator(const AlphabetPtr& alphabet, int mu, int nu) {
  if (mu == nu) return Element::zero(alphabet);
  if (mu < nu) return Element::generator(alphabet, lorentz_name(mu, nu));
  return -Element::generator(alphabet, lorentz_name(nu, mu));
}

namespace {

int eta_of(const Metric& eta, int a, int b) { return a == b ? eta[static_cast<std::size_t>(a)] : 0; }

void require_pair(std::array<int, 2> p) {
  for (int k : p)
    if (k < 0 || k > 3) throw Error("Lorentz index out of range 0..3");
  if (p[0] == p[1]) throw Error("degenerate Lorentz index pair");
}

AlphabetPtr lorentz_alphabet(bool with_translations) {
  std::vector<std::string> names;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) names.push_back(lorentz_name(mu, nu));
  if (with_translations)
    for (int mu = 0; mu < 4; ++mu) names.push_back("P" + std::to_string(mu));
  return make_alphabet(Ring::Gaussian, std::move(names));
}

std::vector<std::array<int, 2>> lorentz_pairs() {
  std::vector<std::array<int, 2>> out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) out.push_back({mu, nu});
  return out;
}

// Brackets of a basis obtained by a linear change of generators.
LiePresentation transported(std::string name, const AlphabetPtr& alphabet, const RingMap& forward,
                            const RingMap& backward, const LiePresentation& base) {
  std::vector<BracketEntry> brackets;
  const auto n = static_cast<Letter>(alphabet->size());
  for (Letter a = 0; a < n; ++a)
    for (Letter b = a + 1; b < n; ++b) {
      Element v = base.bracket(forward.image(a), forward.image(b));
      brackets.push_back({a, b, backward.apply(v)});
    }
  return LiePresentation(std::move(name), alphabet, brackets, base.metric());
}

}  // namespace

Element lorentz_bracket(const AlphabetPtr& alphabet, std::array<int, 2> mu_nu,
                        std::array<int, 2> alpha_beta, const Metric& eta) {
  require_pair(mu_nu);
  require_pair(alpha_beta);
  if (alphabet->ring() != Ring::Gaussian) throw NeedsComplex("Lorentz brackets need ground ring Qi");
  const auto [mu, nu] = mu_nu;
  const auto [al, be] = alpha_beta;
  Element sum = Element::zero(alphabet);
  sum.add_scaled(lorentz_generator(alphabet, nu, be), Scalar::from_int(Ring::Gaussian, eta_of(eta, mu, al)));
  sum.add_scaled(lorentz_generator(alphabet, mu, al), Scalar::from_int(Ring::Gaussian, eta_of(eta, nu, be)));
  sum.add_scaled(lorentz_generator(alphabet, nu, al), Scalar::from_int(Ring::Gaussian, -eta_of(eta, mu, be)));
  sum.add_scaled(lorentz_generator(alphabet, mu, be), Scalar::from_int(Ring::Gaussian, -eta_of(eta, nu, al)));
  return sum.scaled(Scalar::imaginary_unit());
}

LiePresentation so13(const Metric& eta) {
  AlphabetPtr alph = lorentz_alphabet(false);
  const auto pairs = lorentz_pairs();
  std::vector<BracketEntry> brackets;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      brackets.push_back({static_cast<Letter>(a), static_cast<Letter>(b),
                          lorentz_bracket(alph, pairs[a], pairs[b], eta)});
  return LiePresentation("so13", alph, brackets, eta);
}

LiePresentation iso13(const Metric& eta) {
  AlphabetPtr alph = lorentz_alphabet(true);
  const auto pairs = lorentz_pairs();
  const Scalar i = Scalar::imaginary_unit();
  std::vector<BracketEntry> brackets;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      brackets.push_back({static_cast<Letter>(a), static_cast<Letter>(b),
                          lorentz_bracket(alph, pairs[a], pairs[b], eta)});
    const auto [mu, nu] = pairs[a];
    for (int rho = 0; rho < 4; ++rho) {
      Element v = Element::zero(alph);
      v.add_scaled(Element::generator(alph, "P" + std::to_string(nu)),
                   i * Scalar::from_int(Ring::Gaussian, eta_of(eta, mu, rho)));
      v.add_scaled(Element::generator(alph, "P" + std::to_string(mu)),
                   i * Scalar::from_int(Ring::Gaussian, -eta_of(eta, nu, rho)));
      brackets.push_back({static_cast<Letter>(a), alph->index("P" + std::to_string(rho)), v});
    }
  }
  return LiePresentation("iso13", alph, brackets, eta);
}

Element lorentz_J(const AlphabetPtr& alphabet, int i) {
  if (i < 1 || i > 3) throw Error("J index out of range 1..3");
  Element sum = Element::zero(alphabet);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      int eps = levi_civita(0, i, j, k);
      if (eps != 0)
        sum.add_scaled(lorentz_generator(alphabet, j, k), Scalar::from_int(alphabet->ring(), eps));
    }
  return sum.scaled(half(alphabet->ring()));
}

Element lorentz_K(const AlphabetPtr& alphabet, int i) {
  if (i < 1 || i > 3) throw Error("K index out of range 1..3");
  return lorentz_generator(alphabet, 0, i);
}

RingMap nm_to_lorentz(const AlphabetPtr& nm_alphabet, const AlphabetPtr& target) {
  if (target->ring() != Ring::Gaussian) throw NeedsComplex("N/M generators need ground ring Qi");
  std::vector<Element> images(nm_alphabet->size(), Element::zero(target));
  const Scalar h = half(Ring::Gaussian);
  const Scalar ih = Scalar::gaussian(0, mpq_class(1, 2));
  for (int k = 1; k <= 3; ++k) {
    Element J = lorentz_J(target, k), K = lorentz_K(target, k);
    images[nm_alphabet->index("N" + std::to_string(k))] = J.scaled(h) + K.scaled(ih);
    images[nm_alphabet->index("M" + std::to_string(k))] = J.scaled(h) - K.scaled(ih);
  }
  return RingMap("nm", nm_alphabet, target, std::move(images));
}

RingMap jk_to_lorentz(const AlphabetPtr& jk_alphabet, const AlphabetPtr& target) {
  std::vector<Element> images(jk_alphabet->size(), Element::zero(target));
  for (int k = 1; k <= 3; ++k) {
    images[jk_alphabet->index("J" + std::to_string(k))] = lorentz_J(target, k);
    images[jk_alphabet->index("K" + std::to_string(k))] = lorentz_K(target, k);
  }
  return RingMap("jk", jk_alphabet, target, std::move(images));
}

Element jk_decompose(const Element& nm_expression, const AlphabetPtr& lorentz_alphabet) {
  if (nm_expression.ring() != Ring::Gaussian || lorentz_alphabet->ring() != Ring::Gaussian)
    throw NeedsComplex("N_i = 1/2(J_i + i K_i) needs ground ring Qi");
  return nm_to_lorentz(nm_expression.alphabet(), lorentz_alphabet).apply(nm_expression);
}

LiePresentation so13jk(const Metric& eta) {
  LiePresentation base = so13(eta);
  AlphabetPtr alph = make_alphabet(Ring::Gaussian, {"J1", "J2", "J3", "K1", "K2", "K3"});
  RingMap forward = jk_to_lorentz(alph, base.alphabet());
  // L23 = J1, L13 = -J2, L12 = J3, L0i = K_i.
  std::vector<Element> back(base.alphabet()->size(), Element::zero(alph));
  const auto& L = *base.alphabet();
  back[L.index("L23")] = Element::generator(alph, "J1");
  back[L.index("L13")] = -Element::generator(alph, "J2");
  back[L.index("L12")] = Element::generator(alph, "J3");
  for (int k = 1; k <= 3; ++k)
    back[L.index(lorentz_name(0, k))] = Element::generator(alph, "K" + std::to_string(k));
  RingMap backward("jk_inverse", base.alphabet(), alph, std::move(back));
  return transported("so13jk", alph, forward, backward, base);
}

LiePresentation su2su2(const Metric& eta) {
  LiePresentation base = so13(eta);
  AlphabetPtr alph = make_alphabet(Ring::Gaussian, {"N1", "N2", "N3", "M1", "M2", "M3"});
  RingMap forward = nm_to_lorentz(alph, base.alphabet());
  // J_k = N_k + M_k, K_k = -i (N_k - M_k).
  const Scalar minus_i = -Scalar::imaginary_unit();
  auto J = [&](int k) {
    return Element::generator(alph, "N" + std::to_string(k)) +
           Element::generator(alph, "M" + std::to_string(k));
  };
  auto K = [&](int k) {
    return (Element::generator(alph, "N" + std::to_string(k)) -
            Element::generator(alph, "M" + std::to_string(k)))
        .scaled(minus_i);
  };
  std::vector<Element> back(base.alphabet()->size(), Element::zero(alph));
  const auto& L = *base.alphabet();
  back[L.index("L23")] = J(1);
  back[L.index("L13")] = -J(2);
  back[L.index("L12")] = J(3);
  for (int k = 1; k <= 3; ++k) back[L.index(lorentz_name(0, k))] = K(k);
  RingMap backward("nm_inverse", base.alphabet(), alph, std::move(back));
  return transported("su2su2", alph, forward, backward, base);
}

// --- Grading ------------------------------------------------------------------

std::uint64_t graded_dimension(std::size_t generators, std::size_t n) {
  if (generators == 0) return n == 0 ? 1 : 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + generators - 1, generators - 1);
  if (!c.fits_ulong_p()) throw Error("graded dimension exceeds 64 bits");
  return c.get_ui();
}

std::uint64_t graded_dimension(const LiePresentation& p, std::size_t n) {
  return graded_dimension(p.dimension(), n);
}

namespace {

void enumerate_sorted(std::size_t m, std::size_t remaining, Letter start, Word& prefix,
                      std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t g = start; g < m; ++g) {
    prefix.push_back(static_cast<Letter>(g));
    enumerate_sorted(m, remaining - 1, static_cast<Letter>(g), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

GradedSlice graded_slice(const LiePresentation& p, std::size_t n) {
  GradedSlice slice;
  slice.degree = n;
  Word prefix;
  enumerate_sorted(p.dimension(), n, 0, prefix, slice.basis);
  slice.dimension = slice.basis.size();
  return slice;
}

// --- Casimirs -------------------------------------------------------------------

int levi_civita(int a, int b, int c, int d) {
  int v[4] = {a, b, c, d};
  int sign = 1;
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) {
      if (v[x] == v[y]) return 0;
      if (v[x] > v[y]) sign = -sign;
    }
  return sign;
}

namespace {

const Metric& require_poincare(const LiePresentation& iso) {
  for (int mu = 0; mu < 4; ++mu) {
    if (!iso.alphabet()->find("P" + std::to_string(mu)))
      throw Error("'" + iso.name() + "' is not a Poincare presentation (no P" + std::to_string(mu) + ")");
    for (int nu = mu + 1; nu < 4; ++nu)
      if (!iso.alphabet()->find(lorentz_name(mu, nu)))
        throw Error("'" + iso.name() + "' is not a Poincare presentation");
  }
  if (!iso.metric()) throw Error("'" + iso.name() + "' carries no metric");
  return *iso.metric();
}

}  // namespace

Element poincare_p_squared(const LiePresentation& iso) {
  const Metric& eta = require_poincare(iso);
  Element sum = Element::zero(iso.alphabet());
  for (int mu = 0; mu < 4; ++mu) {
    Element p = iso.gen("P" + std::to_string(mu));
    sum.add_scaled(p * p, Scalar::from_int(Ring::Gaussian, eta[static_cast<std::size_t>(mu)]));
  }
  return sum;
}

Element pauli_lubanski(const LiePresentation& iso, int mu) {
  const Metric& eta = require_poincare(iso);
  const AlphabetPtr& alph = iso.alphabet();
  Element sum = Element::zero(alph);
  for (int nu = 0; nu < 4; ++nu)
    for (int rho = 0; rho < 4; ++rho)
      for (int sigma = 0; sigma < 4; ++sigma) {
        int eps = levi_civita(mu, nu, rho, sigma);
        if (eps == 0) continue;
        // Raised indices: L^{nu rho} = eta^{nu nu} eta^{rho rho} L_{nu rho}, P^sigma = eta^{sigma sigma} P_sigma.
        int sign = eps * eta[static_cast<std::size_t>(nu)] * eta[static_cast<std::size_t>(rho)] *
                   eta[static_cast<std::size_t>(sigma)];
        Element term = lorentz_generator(alph, nu, rho) * iso.gen("P" + std::to_string(sigma));
        sum.add_scaled(term, Scalar::from_int(Ring::Gaussian, sign));
      }
  return sum.scaled(half(Ring::Gaussian));
}

Report casimir_check(const LiePresentation& iso) {
  Report report;
  report.title = "Casimir centrality in " + iso.name();
  const Metric& eta = require_poincare(iso);
  const Presentation& pres = iso.presentation();
  PbwNormalizer normalizer(pres);
  const AlphabetPtr& alph = iso.alphabet();

  auto check = [&](const std::string& label, const Element& a, const Element& b) {
    Element nf = normalizer.normalize(commutator(a, b));
    report.add(label, nf.is_zero(), nf.is_zero() ? "" : "residual " + to_string(nf));
  };

  Element p2 = poincare_p_squared(iso);
  for (Letter g = 0; g < alph->size(); ++g) check("[P^2," + alph->name(g) + "]", p2, pres.gen(g));

  std::vector<Element> w;
  for (int mu = 0; mu < 4; ++mu) w.push_back(pauli_lubanski(iso, mu));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      check("[W" + std::to_string(mu) + ",P" + std::to_string(nu) + "]", w[static_cast<std::size_t>(mu)],
            iso.gen("P" + std::to_string(nu)));

  Element w2 = Element::zero(alph);
  for (int mu = 0; mu < 4; ++mu)
    w2.add_scaled(w[static_cast<std::size_t>(mu)] * w[static_cast<std::size_t>(mu)],
                  Scalar::from_int(Ring::Gaussian, eta[static_cast<std::size_t>(mu)]));
  for (Letter g = 0; g < alph->size(); ++g) check("[W^2," + alph->name(g) + "]", w2, pres.gen(g));
  return report;
}

}  // namespace orecalc
