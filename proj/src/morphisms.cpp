#include "orecalc/morphisms.hpp"

namespace orecalc {

RingMap::RingMap(std::string name, AlphabetPtr source, AlphabetPtr target,
                 std::vector<Element> images, bool antilinear)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      antilinear_(antilinear) {
  if (images_.size() != source_->size())
    throw Error("map '" + name_ + "' must give an image for every generator");
  if (antilinear_ && target_->ring() != Ring::Gaussian)
    throw Error("antilinear map '" + name_ + "' needs ground ring Qi");
  for (auto& img : images_) img = relabel(img, target_);
}

RingMap RingMap::identity(AlphabetPtr alphabet, std::string name) {
  std::vector<Element> images;
  for (Letter g = 0; g < alphabet->size(); ++g) images.push_back(Element::generator(alphabet, g));
  return RingMap(std::move(name), alphabet, alphabet, std::move(images));
}

RingMap RingMap::from_images(std::string name, const AlphabetPtr& alphabet,
                             const std::vector<std::pair<std::string, Element>>& images,
                             bool antilinear) {
  std::vector<Element> full;
  for (Letter g = 0; g < alphabet->size(); ++g) full.push_back(Element::generator(alphabet, g));
  for (const auto& [gen, img] : images) full[alphabet->index(gen)] = img;
  return RingMap(std::move(name), alphabet, alphabet, std::move(full), antilinear);
}

Element RingMap::apply(const Element& a) const {
  Element src = relabel(a, source_);
  Element out(target_);
  for (const auto& [w, k] : src.terms()) {
    Element img = Element::one(target_);
    for (Letter g : w) img = img * images_[g];
    out.add_scaled(img, antilinear_ ? k.conj() : k);
  }
  return out;
}

RingMap RingMap::compose(const RingMap& inner) const {
  if (!same_alphabet(inner.target_, source_))
    throw AlgebraMismatch("cannot compose '" + name_ + "' after '" + inner.name_ + "'");
  std::vector<Element> images;
  for (const auto& img : inner.images_) images.push_back(apply(img));
  return RingMap(name_ + "." + inner.name_, inner.source_, target_, std::move(images),
                 antilinear_ != inner.antilinear_);
}

RingMap RingMap::restricted_to(const AlphabetPtr& source, const AlphabetPtr& target) const {
  std::vector<Element> images;
  for (Letter g = 0; g < source->size(); ++g)
    images.push_back(relabel(images_.at(source_->index(source->name(g))), target));
  return RingMap(name_, source, target, std::move(images), antilinear_);
}

AlphaDerivation::AlphaDerivation(std::string name, Endomorphism twist,
                                 std::vector<Element> images)
    : name_(std::move(name)), twist_(std::move(twist)), images_(std::move(images)) {
  if (!twist_.is_endomorphism())
    throw Error("derivation '" + name_ + "' needs an endomorphism as its twist");
  if (twist_.antilinear())
    throw Error("derivation '" + name_ + "' needs a linear twist");
  if (images_.size() != twist_.source()->size())
    throw Error("derivation '" + name_ + "' must give an image for every generator");
  for (auto& img : images_) img = relabel(img, twist_.source());
}

AlphaDerivation AlphaDerivation::zero(Endomorphism twist, std::string name) {
  std::vector<Element> images(twist.source()->size(), Element::zero(twist.source()));
  return AlphaDerivation(std::move(name), std::move(twist), std::move(images));
}

Element AlphaDerivation::apply(const Element& a) const {
  const AlphabetPtr& alph = alphabet();
  Element src = relabel(a, alph);
  Element out(alph);
  for (const auto& [w, k] : src.terms()) {
    // delta(g1...gn) = sum_k alpha(g1...g_{k-1}) delta(g_k) g_{k+1}...gn
    Element prefix = Element::one(alph);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const Element& d = images_[w[pos]];
      if (!d.is_zero()) {
        Word tail(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
        Element suffix = Element::monomial(alph, std::move(tail), out.scalar(1));
        out.add_scaled(prefix * d * suffix, k);
      }
      prefix = prefix * twist_.image(w[pos]);
    }
  }
  return out;
}

Element InnerDerivation::leibniz_residual(const Element& x, const Element& y) const {
  return apply(x) * y + x * apply(y) - apply(x * y);
}

InnerDerivation inner_derivation(const Element& l) { return InnerDerivation(l); }

Element skew_commutator_right(const Element& a, const Element& b, const Endomorphism& alpha) {
  a.require_same_algebra(b);
  return a * b - b * alpha.apply(a);
}

Element skew_commutator_left(const Element& a, const Element& b, const Endomorphism& alpha) {
  a.require_same_algebra(b);
  return a * b - alpha.apply(b) * a;
}

namespace {

std::string relation_text(const Relation& rel) {
  Element lhs = Element::monomial(rel.residual.alphabet(), {rel.hi, rel.lo}, rel.residual.scalar(1));
  return rel.label + " = " + to_string(lhs - rel.residual);
}

}  // namespace

Report validate_ring_map(const RingMap& map, const Presentation& source,
                         const Presentation& target) {
  Report report;
  report.title = "map " + map.name() + " on " + source.name();
  if (map.source()->size() != source.generator_count()) {
    report.add("domain", false, "map is not defined on the generators of " + source.name());
    return report;
  }
  RingMap onto = map.restricted_to(source.alphabet(), target.alphabet());
  for (const auto& rel : source.relations()) {
    Element image = rewrite_normal_form(target, onto.apply(rel.residual));
    report.add("relation " + relation_text(rel),
               image.is_zero(), image.is_zero() ? "" : "image residual " + to_string(image));
  }
  return report;
}

Report validate_endomorphism(const Endomorphism& alpha, const Presentation& p) {
  return validate_ring_map(alpha, p, p);
}

Report validate_derivation(const AlphaDerivation& delta, const Presentation& p) {
  Report report;
  report.title = "derivation " + delta.name() + " on " + p.name();
  AlphaDerivation onto(delta.name(),
                       delta.twist().restricted_to(p.alphabet(), p.alphabet()),
                       [&] {
                         std::vector<Element> imgs;
                         for (Letter g = 0; g < p.generator_count(); ++g)
                           imgs.push_back(relabel(
                               delta.image(delta.alphabet()->index(p.alphabet()->name(g))),
                               p.alphabet()));
                         return imgs;
                       }());
  for (const auto& rel : p.relations()) {
    Element image = rewrite_normal_form(p, onto.apply(rel.residual));
    report.add("relation " + relation_text(rel), image.is_zero(),
               image.is_zero() ? "" : "delta residual " + to_string(image));
  }
  return report;
}

}  // namespace orecalc
