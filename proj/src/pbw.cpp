#include "orecalc/pbw.hpp"

namespace orecalc {

std::size_t PbwNormalizer::WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (Letter g : w) h = h * 1000003u ^ g;
  return h;
}

PbwNormalizer::PbwNormalizer(const Presentation& p, std::size_t max_steps)
    : p_(&p), max_steps_(max_steps) {
  if (!p.pbw_type())
    throw Error("presentation '" + p.name() + "' is not of PBW type; use the generic rewriter");
}

const Element& PbwNormalizer::times_letter(const Word& s, Letter g) {
  Word key = s;
  key.push_back(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const AlphabetPtr& alph = p_->alphabet();
  Element result(alph);
  if (s.empty() || s.back() <= g) {
    result.add_term(key, Scalar::from_int(alph->ring(), 1));
  } else {
    if (++steps_ > max_steps_)
      throw RewriteLimitExceeded("PBW normalization of '" + p_->name() + "' exceeded " +
                                 std::to_string(max_steps_) + " steps");
    // s = prefix*h with h > g: s*g = prefix*rule(h, g).
    Word prefix(s.begin(), s.end() - 1);
    const Element& rule = *p_->rule(s.back(), g);
    for (const auto& [t, c] : rule.terms()) {
      Element partial = Element::monomial(alph, prefix, c);
      for (Letter letter : t) {
        Element next(alph);
        accumulate_times_letter(partial, letter, next);
        partial = std::move(next);
      }
      result += partial;
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

void PbwNormalizer::accumulate_times_letter(const Element& sorted, Letter g, Element& out) {
  for (const auto& [w, c] : sorted.terms()) {
    // Memo references survive rehashing, so the recursion may insert freely.
    out.add_scaled(times_letter(w, g), c);
  }
}

Element PbwNormalizer::normalize(const Element& a) {
  const AlphabetPtr& alph = p_->alphabet();
  Element input = relabel(a, alph);
  Element out(alph);
  for (const auto& [w, c] : input.terms()) {
    Element current = Element::constant(alph, c);
    for (Letter g : w) {
      Element next(alph);
      accumulate_times_letter(current, g, next);
      current = std::move(next);
    }
    out += current;
  }
  return out;
}

Element pbw_normal_form_serial(const Presentation& p, const Element& a) {
  PbwNormalizer n(p);
  return n.normalize(a);
}

Element pbw_normal_form_parallel(const Presentation& p, const Element& a) {
  if (!p.pbw_type())
    throw Error("presentation '" + p.name() + "' is not of PBW type; use the generic rewriter");
  Element input = relabel(a, p.alphabet());
  std::vector<Element> terms;
  terms.reserve(input.size());
  for (const auto& [w, c] : input.terms()) terms.push_back(Element::monomial(p.alphabet(), w, c));

  Element total(p.alphabet());
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel
  {
    PbwNormalizer local(p);
    Element partial(p.alphabet());
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      try {
        partial += local.normalize(terms[static_cast<std::size_t>(k)]);
      } catch (const Error& e) {
#pragma omp critical(orecalc_pbw_error)
        {
          failed = true;
          failure = e.what();
        }
      }
    }
#pragma omp critical(orecalc_pbw_merge)
    total += partial;
  }
  if (failed) throw RewriteLimitExceeded(failure);
  return total;
}

std::vector<Element> pbw_normalize_batch(const Presentation& p, std::span<const Element> items) {
  if (!p.pbw_type())
    throw Error("presentation '" + p.name() + "' is not of PBW type; use the generic rewriter");
  std::vector<Element> out(items.size(), Element::zero(p.alphabet()));
  const auto n = static_cast<std::ptrdiff_t>(items.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel
  {
    PbwNormalizer local(p);
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      try {
        out[static_cast<std::size_t>(k)] = local.normalize(items[static_cast<std::size_t>(k)]);
      } catch (const Error& e) {
#pragma omp critical(orecalc_pbw_error)
        {
          failed = true;
          failure = e.what();
        }
      }
    }
  }
  if (failed) throw RewriteLimitExceeded(failure);
  return out;
}

}  // namespace orecalc
