#include "orecalc/ore.hpp"

#include "orecalc/linear_span.hpp"

#include <map>

namespace orecalc {

namespace {

AlphabetPtr append_generator(const Alphabet& base, const std::string& name) {
  if (base.find(name)) throw InvalidOreSpec("generator '" + name + "' already exists");
  auto names = base.names();
  names.push_back(name);
  return make_alphabet(base.ring(), std::move(names));
}

void require_passed(const Report& report, const std::string& what) {
  if (const CheckItem* bad = report.first_failure())
    throw InvalidOreSpec(what + " fails " + bad->label +
                         (bad->detail.empty() ? "" : " (" + bad->detail + ")"));
}

std::size_t degree_or_zero(const Element& a) { return a.is_zero() ? 0 : filtration_degree(a); }

}  // namespace

OreExtension OreExtension::build(const OreSpec& spec) {
  const Presentation& base = spec.base;
  const AlphabetPtr& balph = base.alphabet();
  AlphabetPtr alph = append_generator(*balph, spec.new_generator);
  const auto x = static_cast<Letter>(balph->size());

  if (!spec.twist.is_endomorphism() || spec.twist.antilinear())
    throw InvalidOreSpec("twist '" + spec.twist.name() + "' must be a linear endomorphism");
  Endomorphism twist = spec.twist.restricted_to(balph, balph);
  Endomorphism dtwist = spec.derivation.twist().restricted_to(balph, balph);
  for (Letter g = 0; g < balph->size(); ++g)
    if (!(twist.image(g) == dtwist.image(g)))
      throw InvalidOreSpec("derivation '" + spec.derivation.name() + "' is twisted by '" +
                           dtwist.name() + "', not by '" + twist.name() + "'");

  std::vector<Element> dimages;
  for (Letter g = 0; g < balph->size(); ++g)
    dimages.push_back(relabel(spec.derivation.image(spec.derivation.alphabet()->index(balph->name(g))),
                              balph));
  AlphaDerivation delta(spec.derivation.name(), twist, std::move(dimages));

  for (Letter g = 0; g < balph->size(); ++g) {
    if (degree_or_zero(twist.image(g)) > 1)
      throw InvalidOreSpec("twist image of " + balph->name(g) + " has degree > 1");
    if (degree_or_zero(delta.image(g)) > 1)
      throw InvalidOreSpec("derivation image of " + balph->name(g) + " has degree > 1");
  }
  require_passed(validate_endomorphism(twist, base), "twist '" + twist.name() + "'");
  require_passed(validate_derivation(delta, base), "derivation '" + delta.name() + "'");

  Presentation ext = base.extended(base.name() + "[" + spec.new_generator + "]", alph);
  Element xe = Element::generator(alph, x);
  for (Letter g = 0; g < balph->size(); ++g) {
    Element rhs = relabel(twist.image(g), alph) * xe + relabel(delta.image(g), alph);
    ext.set_rule(x, g, rhs);
  }
  return OreExtension(base, std::move(ext), x, std::move(twist), std::move(delta));
}

Endomorphism OreExtension::twist_on_extension() const {
  const AlphabetPtr& alph = extended_.alphabet();
  std::vector<Element> images;
  for (Letter g = 0; g < base_.generator_count(); ++g)
    images.push_back(relabel(twist_.image(g), alph));
  images.push_back(Element::generator(alph, variable_));
  return Endomorphism(twist_.name(), alph, alph, std::move(images));
}

Element ore_normalize(const OreExtension& ext, const Element& a, const RewriteOptions& options) {
  return ext.normalize(a, options);
}

Presentation adjoin_central(const Presentation& base, const std::string& generator) {
  AlphabetPtr alph = append_generator(*base.alphabet(), generator);
  Presentation out = base.extended(base.name() + "[" + generator + "]", alph);
  const auto t = static_cast<Letter>(base.generator_count());
  for (Letter g = 0; g < t; ++g)
    out.set_rule(t, g, Element::monomial(alph, {g, t}, Scalar::from_int(alph->ring(), 1)));
  return out;
}

Presentation commutative_presentation(std::string name, const AlphabetPtr& alphabet) {
  Presentation out(std::move(name), alphabet);
  const auto n = static_cast<Letter>(alphabet->size());
  for (Letter hi = 0; hi < n; ++hi)
    for (Letter lo = 0; lo < hi; ++lo)
      out.set_rule(hi, lo, Element::monomial(alphabet, {lo, hi}, Scalar::from_int(alphabet->ring(), 1)));
  return out;
}

AlphabetPtr weyl_tower_base_alphabet(std::size_t level, Ring ring) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k < level; ++k) {
    names.push_back("t" + std::to_string(k));
    names.push_back("x" + std::to_string(k));
  }
  names.push_back("t" + std::to_string(level));
  return make_alphabet(ring, std::move(names));
}

WeylTower build_weyl_tower(std::size_t height, std::span<const std::optional<TowerLevel>> levels,
                           Ring ring) {
  if (height < 1) throw InvalidOreSpec("tower height must be at least 1");
  if (levels.size() > height) throw InvalidOreSpec("more level specs than tower levels");
  WeylTower tower;
  for (std::size_t n = 1; n <= height; ++n) {
    const std::string tn = "t" + std::to_string(n);
    const std::string xn = "x" + std::to_string(n);
    try {
      Presentation prev = n == 1 ? Presentation("k", make_alphabet(ring, {}))
                                 : tower.levels_.back().presentation();
      Presentation base = adjoin_central(prev, tn);
      const AlphabetPtr& alph = base.alphabet();

      std::vector<std::pair<std::string, Element>> twist_images;
      std::vector<Element> dimages(alph->size(), Element::zero(alph));
      dimages[alph->index(tn)] = Element::one(alph);
      if (n <= levels.size() && levels[n - 1]) {
        twist_images = levels[n - 1]->twist;
        for (const auto& [gen, img] : levels[n - 1]->derivation)
          dimages[alph->index(gen)] = relabel(img, alph);
      }
      Endomorphism twist = Endomorphism::from_images("alpha" + std::to_string(n), alph, twist_images);
      AlphaDerivation delta("delta" + std::to_string(n), twist, std::move(dimages));
      tower.levels_.push_back(OreExtension::build({base, xn, twist, delta}));
    } catch (const Error& e) {
      throw InvalidOreSpec("tower level " + std::to_string(n) + ": " + e.what());
    }
  }
  return tower;
}

Report check_overlaps(const Presentation& p) {
  Report report;
  report.title = "overlaps of " + p.name();
  const AlphabetPtr& alph = p.alphabet();
  const auto n = static_cast<Letter>(alph->size());
  std::size_t resolved = 0;
  for (Letter c = 0; c < n; ++c)
    for (Letter b = 0; b < c; ++b) {
      const Element* cb = p.rule(c, b);
      if (!cb) continue;
      for (Letter a = 0; a < b; ++a) {
        const Element* ba = p.rule(b, a);
        if (!ba) continue;
        Element left = rewrite_normal_form(p, *cb * p.gen(a));
        Element right = rewrite_normal_form(p, p.gen(c) * *ba);
        if (left == right) {
          ++resolved;
        } else {
          report.add("overlap " + word_to_string(*alph, {c, b, a}), false,
                     to_string(left) + " != " + to_string(right));
        }
      }
    }
  report.add("overlaps resolved", true, std::to_string(resolved));
  return report;
}

Report holomorph_split_check(const OreExtension& ext, std::span<const Element> generating_set,
                             unsigned cap) {
  const Presentation& base = ext.base();
  const AlphabetPtr& balph = base.alphabet();
  const Presentation& full = ext.presentation();
  const Element x = full.gen(ext.variable());
  const Endomorphism alpha = ext.twist_on_extension();
  const std::string xname = full.alphabet()->name(ext.variable());

  Report report;
  report.title = "holomorph split of " + full.name();

  // Truncated subalgebra generated by V, grouped by filtration degree.
  std::vector<Element> gens;
  for (const auto& v : generating_set) {
    Element nv = rewrite_normal_form(base, relabel(v, balph));
    if (!nv.is_zero()) gens.push_back(std::move(nv));
  }
  LinearSpan span(balph);
  std::map<std::size_t, std::vector<Element>> members;
  std::vector<Element> frontier;
  for (const auto& g : gens)
    if (filtration_degree(g) <= cap && span.insert(g)) {
      members[filtration_degree(g)].push_back(g);
      frontier.push_back(g);
    }
  for (unsigned k = 2; k <= cap && !frontier.empty(); ++k) {
    std::vector<Element> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Element prod = rewrite_normal_form(base, f * g);
        if (prod.is_zero() || filtration_degree(prod) > cap) continue;
        if (span.insert(prod)) {
          members[filtration_degree(prod)].push_back(prod);
          next.push_back(std::move(prod));
        }
      }
    frontier = std::move(next);
  }

  for (const auto& [degree, elems] : members) {
    std::string witness;
    bool ok = true;
    for (const auto& w : elems) {
      Element lifted = ext.lift(w);
      Element bracket = ext.normalize(x * lifted - alpha.apply(lifted) * x);
      Element dw = rewrite_normal_form(base, ext.derivation().apply(w));
      if (!(bracket == ext.lift(dw))) {
        ok = false;
        witness = "(" + xname + ", " + to_string(w) + "): " + to_string(bracket) +
                  " differs from delta image " + to_string(dw);
        break;
      }
      if (!span.contains(dw)) {
        ok = false;
        witness = "(" + xname + ", " + to_string(w) + "): " + xname + "*w - alpha(w)*" + xname +
                  " = " + to_string(bracket) + " not in span(V)";
        break;
      }
    }
    report.add("degree " + std::to_string(degree) + " (" + std::to_string(elems.size()) +
                   " spanning elements)",
               ok, witness);
  }
  report.note("span(V) dimension up to degree " + std::to_string(cap),
              std::to_string(span.dimension()));
  report.note("delta-stability beyond one application", "unverified");
  return report;
}

}  // namespace orecalc
