#pragma once

#include "orecalc/algebra.hpp"

#include <doctest.h>

#include <random>
#include <string>

namespace orecalc::testing {

inline Algebra builtin(std::string_view name, const Metric& eta = kMostlyMinus) {
  return Algebra::load(*builtin_algebra_file(name, eta));
}

// Random element with small integer (or Gaussian integer) coefficients.
inline Element random_element(const AlphabetPtr& alphabet, std::mt19937_64& rng, std::size_t terms,
                              std::size_t max_degree) {
  Element out(alphabet);
  const bool complex = alphabet->ring() == Ring::Gaussian;
  for (std::size_t k = 0; k < terms; ++k) {
    Word w(rng() % (max_degree + 1));
    for (auto& g : w) g = static_cast<Letter>(rng() % alphabet->size());
    const long re = static_cast<long>(rng() % 7) - 3;
    const long im = complex ? static_cast<long>(rng() % 5) - 2 : 0;
    out.add_term(w, Scalar(alphabet->ring(), re, im));
  }
  return out;
}

inline Element element(const Algebra& a, std::string_view text) {
  return a.elaborate(*parse_expression(text));
}

}  // namespace orecalc::testing

namespace doctest {
template <>
struct StringMaker<orecalc::Element> {
  static String convert(const orecalc::Element& e) { return orecalc::to_string(e).c_str(); }
};
template <>
struct StringMaker<orecalc::Scalar> {
  static String convert(const orecalc::Scalar& s) { return s.to_string().c_str(); }
};
}  // namespace doctest
