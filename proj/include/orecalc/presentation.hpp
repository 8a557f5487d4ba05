#pragma once

#include "orecalc/free_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orecalc {

// A defining relation g_hi * g_lo = rhs, stored as its residual
// g_hi * g_lo - rhs.
struct Relation {
  std::string label;  // e.g. "x*t"
  Letter hi = 0;
  Letter lo = 0;
  Element residual;
};

// Quotient of a free algebra by pair rules g_hi * g_lo -> rhs (hi > lo).
// Every rhs word is DegLex-smaller than the pair and has degree <= 2, so the
// rewrite system terminates. Pairs without a rule are left alone.
class Presentation {
public:
  Presentation(std::string name, AlphabetPtr alphabet);

  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  Ring ring() const { return alphabet_->ring(); }
  std::size_t generator_count() const { return alphabet_->size(); }

  void set_rule(Letter hi, Letter lo, Element rhs);
  const Element* rule(Letter hi, Letter lo) const;
  bool has_rule(Letter a, Letter b) const { return rule(a, b) != nullptr; }

  // Leftmost position p with a rule for (w[p], w[p+1]), if any.
  std::optional<std::size_t> first_redex(const Word& w) const;
  bool is_normal(const Word& w) const { return !first_redex(w).has_value(); }
  bool is_normal(const Element& a) const;

  // Every pair hi > lo carries a rule whose rhs words are nondecreasing;
  // normal words are then exactly the nondecreasing ones.
  bool pbw_type() const;

  std::vector<Relation> relations() const;

  // Rules copied onto a larger alphabet whose leading names match ours.
  Presentation extended(std::string name, AlphabetPtr larger) const;

  Element zero() const { return Element::zero(alphabet_); }
  Element one() const { return Element::one(alphabet_); }
  Element gen(std::string_view n) const { return Element::generator(alphabet_, n); }
  Element gen(Letter g) const { return Element::generator(alphabet_, g); }

private:
  std::string name_;
  AlphabetPtr alphabet_;
  std::vector<std::optional<Element>> rules_;  // row-major [hi * n + lo]
};

class RewriteLimitExceeded : public Error {
public:
  using Error::Error;
};

// Rule-application cap: 10^6 unless ORECALC_MAX_REWRITES is set.
std::size_t default_rewrite_cap();

struct RewriteOptions {
  std::size_t max_rewrites = default_rewrite_cap();
  // When set, terms and redex positions are picked pseudo-randomly instead of
  // leftmost; used to probe confluence.
  std::optional<std::uint64_t> random_seed;
};

// Generic serial rewriter: repeatedly rewrites the leftmost redex of each
// pending term until every word is normal.
Element rewrite_normal_form(const Presentation& p, const Element& a,
                            const RewriteOptions& options = {});

// Relation-side checks used when validating maps against a presentation.
struct Violation {
  std::string relation;
  Element residual;
};

}  // namespace orecalc
