#include "orecalc/free_algebra.hpp"

#include <algorithm>

namespace orecalc {

Alphabet::Alphabet(Ring ring, std::vector<std::string> names)
    : ring_(ring), names_(std::move(names)) {
  if (names_.size() > 0xFFFF) throw Error("too many generators");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw Error("empty generator name");
    if (n == "i") throw Error("'i' is reserved for the imaginary unit");
    if (!lookup_.emplace(n, static_cast<Letter>(i)).second)
      throw Error("duplicate generator name '" + n + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(Ring ring, std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(ring, std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

Element Element::one(AlphabetPtr alphabet) {
  Element e(std::move(alphabet));
  e.add_term({}, e.scalar(1));
  return e;
}

Element Element::constant(AlphabetPtr alphabet, const Scalar& c) {
  Element e(std::move(alphabet));
  e.add_term({}, c);
  return e;
}

Element Element::generator(AlphabetPtr alphabet, Letter g) {
  if (g >= alphabet->size()) throw UnknownGenerator("generator index out of range");
  Element e(std::move(alphabet));
  e.add_term({g}, e.scalar(1));
  return e;
}

Element Element::generator(AlphabetPtr alphabet, std::string_view name) {
  Letter g = alphabet->index(name);
  return generator(std::move(alphabet), g);
}

Element Element::monomial(AlphabetPtr alphabet, Word word, const Scalar& c) {
  Element e(std::move(alphabet));
  e.add_term(word, c);
  return e;
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? scalar(0) : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar lifted = c.in(ring());
  auto [it, inserted] = terms_.try_emplace(w, lifted);
  if (inserted) return;
  it->second += lifted;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_scaled(const Element& other, const Scalar& c) {
  require_same_algebra(other);
  if (c.is_zero()) return;
  Scalar lifted = c.in(ring());
  for (const auto& [w, k] : other.terms_) add_term(w, k * lifted);
}

void Element::require_same_algebra(const Element& other) const {
  if (!same_alphabet(alphabet_, other.alphabet_))
    throw AlgebraMismatch("elements belong to different algebras");
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(other);
  for (const auto& [w, k] : other.terms_) add_term(w, k);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(other);
  for (const auto& [w, k] : other.terms_) add_term(w, -k);
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [w, k] : out.terms_) k = -k;
  return out;
}

Element Element::scaled(const Scalar& c) const {
  Element out(alphabet_);
  if (c.is_zero()) return out;
  Scalar lifted = c.in(ring());
  for (const auto& [w, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, k * lifted);
  return out;
}

Element free_mul(const Element& a, const Element& b) {
  a.require_same_algebra(b);
  Element out(a.alphabet());
  Word w;
  for (const auto& [wa, ka] : a.terms()) {
    for (const auto& [wb, kb] : b.terms()) {
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ka * kb);
    }
  }
  return out;
}

Element operator*(const Element& a, const Element& b) { return free_mul(a, b); }

bool operator==(const Element& a, const Element& b) {
  return same_alphabet(a.alphabet_, b.alphabet_) && a.terms_ == b.terms_;
}

std::size_t filtration_degree(const Element& a) {
  if (a.is_zero()) throw Error("filtration degree of the zero element is undefined");
  return a.terms().rbegin()->first.size();
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element power(const Element& a, unsigned exponent) {
  Element out = Element::one(a.alphabet());
  for (unsigned k = 0; k < exponent; ++k) out = out * a;
  return out;
}

Element relabel(const Element& a, const AlphabetPtr& target) {
  if (same_alphabet(a.alphabet(), target)) return a;
  constexpr Letter unmapped = 0xFFFF;
  std::vector<Letter> map(a.alphabet()->size(), unmapped);
  Element out(target);
  Word w;
  for (const auto& [src, k] : a.terms()) {
    w.clear();
    for (Letter g : src) {
      if (map[g] == unmapped) map[g] = target->index(a.alphabet()->name(g));
      w.push_back(map[g]);
    }
    out.add_term(w, k.in(target->ring()));
  }
  return out;
}

bool is_nondecreasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += alphabet.name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Splits a coefficient into a sign to print between terms and the magnitude
// text. Mixed complex coefficients keep their own parenthesized sign.
std::pair<bool, std::string> signed_coefficient(const Scalar& c) {
  bool negative = false;
  Scalar mag = c;
  if (c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
    negative = true;
    mag = -c;
  }
  return {negative, mag.is_one() ? std::string() : mag.to_string()};
}

}  // namespace

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& terms = a.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [w, k] = *it;
    auto [negative, coeff] = signed_coefficient(k);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += coeff.empty() ? "1" : coeff;
    } else {
      if (!coeff.empty()) out += coeff + "*";
      out += word_to_string(*a.alphabet(), w);
    }
  }
  return out;
}

}  // namespace orecalc
