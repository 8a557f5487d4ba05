#pragma once

#include "orecalc/presentation.hpp"

#include <span>
#include <unordered_map>
#include <vector>

namespace orecalc {

// Normal ordering for PBW-type presentations (every descending pair has a
// rule whose words are nondecreasing). Works by inserting one letter at a
// time into an already sorted word and memoizing sorted-word * letter, which
// is a different route from the leftmost rewriter in presentation.hpp; the
// two are cross-checked in the tests.
//
// Not thread-safe (the memo is mutable); give each thread its own instance.
class PbwNormalizer {
public:
  explicit PbwNormalizer(const Presentation& p, std::size_t max_steps = default_rewrite_cap());

  Element normalize(const Element& a);
  std::size_t steps() const { return steps_; }

private:
  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
  };

  // Normal form of s*g for a sorted word s.
  const Element& times_letter(const Word& s, Letter g);
  void accumulate_times_letter(const Element& sorted, Letter g, Element& out);

  const Presentation* p_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::unordered_map<Word, Element, WordHash> memo_;
};

// Serial kernel.
Element pbw_normal_form_serial(const Presentation& p, const Element& a);

// OpenMP kernel: terms are normalized independently on each thread and the
// partial sums merged. Exact arithmetic makes the result identical to the
// serial kernel regardless of scheduling.
Element pbw_normal_form_parallel(const Presentation& p, const Element& a);

// Independent elements normalized in parallel; output order matches input.
std::vector<Element> pbw_normalize_batch(const Presentation& p, std::span<const Element> items);

}  // namespace orecalc
