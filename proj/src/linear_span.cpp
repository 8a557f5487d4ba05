#include "orecalc/linear_span.hpp"

namespace orecalc {

Element LinearSpan::reduce(const Element& v) const {
  Element r = relabel(v, alphabet_);
  bool changed = true;
  while (changed && !r.is_zero()) {
    changed = false;
    for (const auto& b : basis_) {
      const Word& lead = b.terms().rbegin()->first;
      Scalar c = r.coefficient(lead);
      if (c.is_zero()) continue;
      r.add_scaled(b, -c);
      changed = true;
    }
  }
  return r;
}

bool LinearSpan::insert(const Element& v) {
  Element r = reduce(v);
  if (r.is_zero()) return false;
  Scalar lead = r.terms().rbegin()->second;
  basis_.push_back(r.scaled(lead.inverse()));
  return true;
}

}  // namespace orecalc
