#pragma once

#include "orecalc/free_algebra.hpp"

#include <vector>

namespace orecalc {

// Exact row-echelon basis of a finite set of elements, keyed by leading word.
class LinearSpan {
public:
  explicit LinearSpan(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  // Returns false when v was already in the span.
  bool insert(const Element& v);

  // v minus its projection along the basis; zero iff v is in the span.
  Element reduce(const Element& v) const;
  bool contains(const Element& v) const { return reduce(v).is_zero(); }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Element>& basis() const { return basis_; }

private:
  AlphabetPtr alphabet_;
  std::vector<Element> basis_;  // leading coefficient 1, distinct leading words
};

}  // namespace orecalc
