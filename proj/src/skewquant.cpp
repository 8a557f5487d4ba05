#include "orecalc/skewquant.hpp"

#include "orecalc/ore.hpp"
#include "orecalc/pbw.hpp"

namespace orecalc {

namespace {

std::vector<std::string> ccr_names(const std::vector<CcrPair>& pairs, const std::string& hbar) {
  std::vector<std::string> names{hbar};
  for (const auto& pr : pairs) names.push_back(pr.l);
  for (const auto& pr : pairs) names.push_back(pr.p);
  return names;
}

bool twist_fixes(const Endomorphism& alpha, const Alphabet& alph, const std::string& g) {
  Letter k = alph.index(g);
  return alpha.image(k) == Element::generator(alpha.source(), k);
}

}  // namespace

StarAlgebraContext make_ccr_context(std::string name, std::vector<CcrPair> pairs,
                                    const std::vector<std::pair<std::string, Element>>& twist_images,
                                    std::optional<Metric> metric, std::string twist_name) {
  if (pairs.empty()) throw Error("a CCR context needs at least one pair");
  const std::string hbar = "hbar";
  AlphabetPtr full = make_alphabet(Ring::Gaussian, ccr_names(pairs, hbar));
  std::vector<std::pair<std::string, Element>> images;
  for (const auto& [g, img] : twist_images) images.emplace_back(g, relabel(img, full));
  Endomorphism alpha = Endomorphism::from_images(twist_name, full, images);

  std::vector<std::string> base_names{hbar};
  for (const auto& pr : pairs) base_names.push_back(pr.l);
  Presentation current =
      commutative_presentation(name, make_alphabet(Ring::Gaussian, std::move(base_names)));
  const Scalar minus_i = -Scalar::imaginary_unit();

  for (const auto& pr : pairs) {
    const AlphabetPtr& alph = current.alphabet();
    // Only the matching l is twisted; everything else commutes with p.
    Element twisted_l = relabel(alpha.image(full->index(pr.l)), alph);
    Endomorphism level = Endomorphism::from_images(twist_name, alph, {{pr.l, twisted_l}});
    std::vector<Element> dimages(alph->size(), Element::zero(alph));
    dimages[alph->index(pr.l)] =
        Element::generator(alph, hbar).scaled(minus_i * Scalar::from_int(Ring::Gaussian, pr.eta));
    AlphaDerivation delta("d/d" + pr.l, level, std::move(dimages));
    current = OreExtension::build({current, pr.p, level, delta}).presentation();
  }

  StarAlgebraContext ctx{current.extended(std::move(name), full),
                         std::move(pairs),
                         hbar,
                         std::vector<bool>(full->size(), true),
                         std::vector<std::optional<Element>>(full->size()),
                         std::move(alpha),
                         metric};
  return ctx;
}

std::vector<std::pair<std::string, Element>> parity_images(const AlphabetPtr& alphabet,
                                                           const std::vector<CcrPair>& pairs) {
  std::vector<std::pair<std::string, Element>> out;
  for (const auto& pr : pairs) {
    out.emplace_back(pr.l, -Element::generator(alphabet, pr.l));
    out.emplace_back(pr.p, -Element::generator(alphabet, pr.p));
  }
  return out;
}

namespace {

std::vector<CcrPair> single_pair() { return {{"p", "l", 1}}; }

std::vector<CcrPair> four_pairs(const Metric& eta) {
  std::vector<CcrPair> out;
  for (int mu = 0; mu < 4; ++mu)
    out.push_back({"p" + std::to_string(mu), "l" + std::to_string(mu), eta[static_cast<std::size_t>(mu)]});
  return out;
}

AlphabetPtr scratch_alphabet(const std::vector<CcrPair>& pairs) {
  return make_alphabet(Ring::Gaussian, ccr_names(pairs, "hbar"));
}

}  // namespace

StarAlgebraContext ccr_context() { return make_ccr_context("ccr", single_pair(), {}, std::nullopt, "id"); }

StarAlgebraContext skewccr_context() {
  auto pairs = single_pair();
  return make_ccr_context("skewccr", pairs, parity_images(scratch_alphabet(pairs), pairs),
                          std::nullopt, "par");
}

StarAlgebraContext ccr4_context(const Metric& eta) {
  return make_ccr_context("ccr4", four_pairs(eta), {}, eta, "id");
}

StarAlgebraContext skewccr4_context(const Metric& eta) {
  auto pairs = four_pairs(eta);
  return make_ccr_context("skewccr4", pairs, parity_images(scratch_alphabet(pairs), pairs), eta,
                          "par");
}

StarAlgebraContext badtwist_context() {
  auto pairs = single_pair();
  AlphabetPtr alph = scratch_alphabet(pairs);
  return make_ccr_context("badtwist", pairs,
                          {{"l", Element::generator(alph, "l").scaled(Scalar::imaginary_unit())}},
                          std::nullopt, "rot");
}

Element adjoint(const AlphabetPtr& alph, const std::vector<bool>& hermitian,
                const std::vector<std::optional<Element>>& adjoint_images, const Element& a) {
  Element src = relabel(a, alph);
  std::vector<std::optional<Element>> images(alph->size());
  for (Letter g = 0; g < alph->size(); ++g) {
    if (hermitian.at(g))
      images[g] = Element::generator(alph, g);
    else if (adjoint_images.at(g))
      images[g] = relabel(*adjoint_images[g], alph);
  }
  Element out(alph);
  for (const auto& [w, c] : src.terms()) {
    Element term = Element::constant(alph, c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (!images[*it])
        throw Error("generator '" + alph->name(*it) + "' is not hermitian and has no declared adjoint");
      term = term * *images[*it];
    }
    out += term;
  }
  return out;
}

Element adjoint(const StarAlgebraContext& ctx, const Element& a) {
  return adjoint(ctx.algebra.alphabet(), ctx.hermitian, ctx.adjoint_images, a);
}

Element normalize(const StarAlgebraContext& ctx, const Element& a) {
  return pbw_normal_form_serial(ctx.algebra, a);
}

Element skew_ccr_residual(const StarAlgebraContext& ctx, std::size_t pair) {
  const CcrPair& pr = ctx.pairs.at(pair);
  const Presentation& P = ctx.algebra;
  Element p = P.gen(pr.p), l = P.gen(pr.l);
  return skew_commutator_left(p, l, ctx.twist) +
         P.gen(ctx.hbar).scaled(Scalar::imaginary_unit() * Scalar::from_int(Ring::Gaussian, pr.eta));
}

Report asym_conjugate_check(const StarAlgebraContext& ctx) {
  Report report;
  report.title = "adjoint of the skew bracket (" + ctx.twist.name() + ")";
  const AlphabetPtr& alph = ctx.algebra.alphabet();
  for (Letter g = 0; g < alph->size(); ++g) {
    Element x = Element::generator(alph, g);
    Element lhs = adjoint(ctx, ctx.twist.apply(x));
    Element rhs = ctx.twist.apply(adjoint(ctx, x));
    report.add("adj(" + ctx.twist.name() + "(" + alph->name(g) + ")) = " + ctx.twist.name() + "(adj(" +
                   alph->name(g) + "))",
               lhs == rhs, lhs == rhs ? "" : to_string(lhs) + " vs " + to_string(rhs));
  }
  for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
    const CcrPair& pr = ctx.pairs[k];
    Element p = ctx.algebra.gen(pr.p), l = ctx.algebra.gen(pr.l);
    Element lhs = adjoint(ctx, skew_commutator_left(p, l, ctx.twist));
    Element rhs = skew_commutator_right(l, p, ctx.twist);
    report.add("adj(" + pr.p + "*" + pr.l + " - alpha(" + pr.l + ")*" + pr.p + ") = " + pr.l + "*" +
                   pr.p + " - " + pr.p + "*alpha(" + pr.l + ")",
               lhs == rhs, lhs == rhs ? to_string(rhs) : to_string(lhs) + " != " + to_string(rhs));
    Element image = normalize(ctx, adjoint(ctx, skew_ccr_residual(ctx, k)));
    report.note("adjoint preserves relation " + pr.p + "*" + pr.l,
                image.is_zero() ? "yes" : "no, adjoint of the residual normalizes to " + to_string(image));
  }
  return report;
}

Element ccr_lorentz(const StarAlgebraContext& ctx, int mu, int nu) {
  const Presentation& P = ctx.algebra;
  if (mu < 0 || nu < 0 || static_cast<std::size_t>(mu) >= ctx.pairs.size() ||
      static_cast<std::size_t>(nu) >= ctx.pairs.size())
    throw Error("index out of range for the CCR pairs");
  if (mu == nu) return P.zero();
  const auto& a = ctx.pairs[static_cast<std::size_t>(mu)];
  const auto& b = ctx.pairs[static_cast<std::size_t>(nu)];
  Element bilinear = P.gen(a.l) * P.gen(b.p) - P.gen(a.p) * P.gen(b.l);
  return bilinear.scaled(-Scalar::imaginary_unit());
}

Report bilinear_invariance_check(const StarAlgebraContext& ctx) {
  Report report;
  report.title = "bilinears under " + ctx.twist.name();
  StarAlgebraContext plain = make_ccr_context(ctx.algebra.name() + "-unskewed", ctx.pairs, {}, ctx.metric, "id");
  const int n = static_cast<int>(ctx.pairs.size());

  bool diagonal = true;
  for (int mu = 0; mu < n; ++mu) diagonal = diagonal && ccr_lorentz(ctx, mu, mu).is_zero();
  report.add("L_{mu mu} = 0", diagonal);

  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) continue;
      Element skewed = normalize(ctx, ccr_lorentz(ctx, mu, nu));
      Element unskewed = relabel(normalize(plain, ccr_lorentz(plain, mu, nu)), ctx.algebra.alphabet());
      report.add("L" + std::to_string(mu) + std::to_string(nu) + " skewed = unskewed", skewed == unskewed,
                 skewed == unskewed ? to_string(skewed)
                                    : to_string(skewed) + " != " + to_string(unskewed));
    }

  // Negative control: a same-index product feels the twist unless the twist
  // fixes that l.
  bool any_twisted = false, any_differs = false;
  for (const auto& pr : ctx.pairs) {
    Element skewed = normalize(ctx, ctx.algebra.gen(pr.p) * ctx.algebra.gen(pr.l));
    Element unskewed = relabel(normalize(plain, plain.algebra.gen(pr.p) * plain.algebra.gen(pr.l)),
                               ctx.algebra.alphabet());
    const bool fixed = twist_fixes(ctx.twist, *ctx.algebra.alphabet(), pr.l);
    any_twisted = any_twisted || !fixed;
    any_differs = any_differs || !(skewed == unskewed);
    report.note("control " + pr.p + "*" + pr.l,
                skewed == unskewed ? "unchanged, " + to_string(skewed) +
                                         (fixed ? " (twist fixes " + pr.l + ")" : "")
                                   : to_string(skewed) + " vs unskewed " + to_string(unskewed));
  }
  if (any_twisted)
    report.add("negative control: a same-index product differs", any_differs);
  else
    report.note("negative control", "twist fixes every l, nothing to compare");
  return report;
}

Report lorentz_closure_check(const StarAlgebraContext& ctx) {
  Report report;
  report.title = "Lorentz closure of the bilinears under " + ctx.twist.name();
  if (!ctx.metric || ctx.pairs.size() != 4) {
    report.note("closure", "needs four pairs and a metric");
    return report;
  }
  const Metric& eta = *ctx.metric;
  const Presentation& P = ctx.algebra;
  AlphabetPtr lor = so13(eta).alphabet();

  // L_{rho sigma} -> -i*hbar * L_{rho sigma}(l, p), the CCR constant.
  const Element scale = P.gen(ctx.hbar).scaled(-Scalar::imaginary_unit());
  std::vector<Element> images;
  std::vector<std::array<int, 2>> pairs;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      images.push_back(scale * ccr_lorentz(ctx, mu, nu));
      pairs.push_back({mu, nu});
    }
  RingMap embed("bilinear", lor, P.alphabet(), images);

  std::vector<Element> lhs, rhs;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      lhs.push_back(commutator(ccr_lorentz(ctx, pairs[a][0], pairs[a][1]),
                               ccr_lorentz(ctx, pairs[b][0], pairs[b][1])));
      rhs.push_back(embed.apply(lorentz_bracket(lor, pairs[a], pairs[b], eta)));
      labels.push_back("[" + lorentz_name(pairs[a][0], pairs[a][1]) + "," +
                       lorentz_name(pairs[b][0], pairs[b][1]) + "]");
    }
  std::vector<Element> nl = pbw_normalize_batch(P, lhs);
  std::vector<Element> nr = pbw_normalize_batch(P, rhs);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    Element diff = nl[k] - nr[k];
    report.add(labels[k], diff.is_zero(), diff.is_zero() ? "" : "excess " + to_string(diff));
  }
  return report;
}

Report skew_ccr_report(const StarAlgebraContext& ctx) {
  Report report;
  report.title = "check-skew-ccr " + ctx.algebra.name();
  Report residuals;
  residuals.title = "skewed commutation relation";
  for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
    Element r = normalize(ctx, skew_ccr_residual(ctx, k));
    const auto& pr = ctx.pairs[k];
    residuals.add(pr.p + "*" + pr.l + " - alpha(" + pr.l + ")*" + pr.p + " + i*eta*hbar", r.is_zero(),
                  to_string(r));
  }
  report.append(residuals);
  report.append(asym_conjugate_check(ctx));
  report.append(bilinear_invariance_check(ctx));
  if (ctx.metric) report.append(lorentz_closure_check(ctx));
  return report;
}

}  // namespace orecalc
