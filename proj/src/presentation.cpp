#include "orecalc/presentation.hpp"

#include <cstdlib>
#include <iterator>
#include <random>

namespace orecalc {

Presentation::Presentation(std::string name, AlphabetPtr alphabet)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      rules_(alphabet_->size() * alphabet_->size()) {}

void Presentation::set_rule(Letter hi, Letter lo, Element rhs) {
  const std::size_t n = alphabet_->size();
  if (hi >= n || lo >= n) throw Error("rule generator out of range");
  if (hi <= lo)
    throw Error("rule " + alphabet_->name(hi) + "*" + alphabet_->name(lo) +
                " must rewrite a descending pair");
  rhs = relabel(rhs, alphabet_);
  const Word lhs{hi, lo};
  for (const auto& [w, k] : rhs.terms()) {
    if (w.size() > 2 || !DegLex{}(w, lhs))
      throw Error("rule " + word_to_string(*alphabet_, lhs) + " -> " + to_string(rhs) +
                  " does not lower the monomial order");
  }
  rules_[hi * n + lo] = std::move(rhs);
}

const Element* Presentation::rule(Letter hi, Letter lo) const {
  if (hi <= lo) return nullptr;
  const auto& r = rules_[hi * alphabet_->size() + lo];
  return r ? &*r : nullptr;
}

std::optional<std::size_t> Presentation::first_redex(const Word& w) const {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1] && rule(w[p], w[p + 1])) return p;
  return std::nullopt;
}

bool Presentation::is_normal(const Element& a) const {
  for (const auto& [w, k] : a.terms())
    if (!is_normal(w)) return false;
  return true;
}

bool Presentation::pbw_type() const {
  const auto n = static_cast<Letter>(alphabet_->size());
  for (Letter hi = 0; hi < n; ++hi)
    for (Letter lo = 0; lo < hi; ++lo) {
      const Element* r = rule(hi, lo);
      if (!r) return false;
      for (const auto& [w, k] : r->terms())
        if (!is_nondecreasing(w)) return false;
    }
  return true;
}

std::vector<Relation> Presentation::relations() const {
  std::vector<Relation> out;
  const auto n = static_cast<Letter>(alphabet_->size());
  for (Letter hi = 0; hi < n; ++hi)
    for (Letter lo = 0; lo < hi; ++lo)
      if (const Element* r = rule(hi, lo)) {
        Element lhs = Element::monomial(alphabet_, {hi, lo}, Scalar::from_int(ring(), 1));
        out.push_back({word_to_string(*alphabet_, {hi, lo}), hi, lo, lhs - *r});
      }
  return out;
}

Presentation Presentation::extended(std::string name, AlphabetPtr larger) const {
  if (larger->size() < alphabet_->size()) throw Error("extension must not drop generators");
  for (Letter g = 0; g < alphabet_->size(); ++g)
    if (larger->name(g) != alphabet_->name(g))
      throw Error("extension must keep the base generators first and in order");
  Presentation out(std::move(name), larger);
  const auto n = static_cast<Letter>(alphabet_->size());
  for (Letter hi = 0; hi < n; ++hi)
    for (Letter lo = 0; lo < hi; ++lo)
      if (const Element* r = rule(hi, lo)) out.set_rule(hi, lo, relabel(*r, larger));
  return out;
}

std::size_t default_rewrite_cap() {
  if (const char* env = std::getenv("ORECALC_MAX_REWRITES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

Element rewrite_normal_form(const Presentation& p, const Element& a,
                            const RewriteOptions& options) {
  Element input = relabel(a, p.alphabet());
  Element pending = input;
  Element result = p.zero();
  std::optional<std::mt19937_64> rng;
  if (options.random_seed) rng.emplace(*options.random_seed);

  std::size_t applications = 0;
  Word next;
  while (!pending.is_zero()) {
    // Largest term first lets cancelling contributions meet before they are
    // expanded further.
    auto it = std::prev(pending.terms().end());
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      it = std::next(pending.terms().begin(), static_cast<std::ptrdiff_t>(pick(*rng)));
    }
    Word w = it->first;
    Scalar c = it->second;
    pending.add_term(w, -c);

    std::optional<std::size_t> pos;
    if (rng) {
      std::vector<std::size_t> redexes;
      for (std::size_t q = 0; q + 1 < w.size(); ++q)
        if (p.has_rule(w[q], w[q + 1])) redexes.push_back(q);
      if (!redexes.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
        pos = redexes[pick(*rng)];
      }
    } else {
      pos = p.first_redex(w);
    }
    if (!pos) {
      result.add_term(w, c);
      continue;
    }
    if (++applications > options.max_rewrites)
      throw RewriteLimitExceeded("rewrite cap of " + std::to_string(options.max_rewrites) +
                                 " rule applications exceeded in '" + p.name() +
                                 "' while normalizing a degree-" +
                                 std::to_string(filtration_degree(input)) +
                                 " element; the presentation is probably ill-formed");
    const Element& rhs = *p.rule(w[*pos], w[*pos + 1]);
    for (const auto& [rw, rk] : rhs.terms()) {
      next.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
      next.insert(next.end(), rw.begin(), rw.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos) + 2, w.end());
      pending.add_term(next, c * rk);
    }
  }
  return result;
}

}  // namespace orecalc
