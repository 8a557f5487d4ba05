#include "orecalc/free_algebra.hpp"
#include "orecalc/linear_span.hpp"

#include "support.hpp"

using namespace orecalc;
using namespace orecalc::testing;

namespace {

Algebra free_qi() {
  AlgebraFile f;
  f.name = "free3";
  f.ground_ring = "Qi";
  f.generators = {{"a", false, {}}, {"b", false, {}}, {"c", false, {}}};
  f.relations.kind = "free";
  return Algebra::load(f);
}

}  // namespace

TEST_CASE("words are compared by degree, then lexicographically") {
  DegLex less;
  CHECK(less(Word{2}, Word{0, 0}));
  CHECK(less(Word{0, 1}, Word{1, 0}));
  CHECK_FALSE(less(Word{1, 0}, Word{1, 0}));
}

TEST_CASE("free multiplication concatenates and is associative") {
  auto alph = make_alphabet(Ring::Rational, {"a", "b"});
  const Element a = Element::generator(alph, "a"), b = Element::generator(alph, "b");
  const Element ab = a * b;
  CHECK(ab.coefficient(Word{0, 1}) == Scalar::from_int(Ring::Rational, 1));
  CHECK_FALSE(ab == b * a);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    Element x = random_element(alph, rng, 3, 2), y = random_element(alph, rng, 3, 2),
            z = random_element(alph, rng, 3, 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("zero coefficients are dropped") {
  auto alph = make_alphabet(Ring::Rational, {"a"});
  Element a = Element::generator(alph, "a");
  CHECK((a - a).is_zero());
  CHECK((a - a).size() == 0);
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("elements from different alphabets do not mix") {
  auto x = make_alphabet(Ring::Rational, {"a"});
  auto y = make_alphabet(Ring::Rational, {"b"});
  CHECK_THROWS_AS(Element::generator(x, "a") + Element::generator(y, "b"), AlgebraMismatch);
  CHECK_THROWS_AS(Element::generator(x, "z"), UnknownGenerator);
}

TEST_CASE("power and filtration degree") {
  auto alph = make_alphabet(Ring::Rational, {"a", "b"});
  Element s = Element::generator(alph, "a") + Element::generator(alph, "b");
  CHECK(power(s, 0) == Element::one(alph));
  CHECK(power(s, 3).size() == 8);
  CHECK(filtration_degree(power(s, 3)) == 3);
}

TEST_CASE("printing round trip: parse(to_string(e)) == e") {
  const Algebra alg = free_qi();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Element e = random_element(alg.alphabet(), rng, 4, 4);
    const std::string text = to_string(e);
    CAPTURE(text);
    CHECK(element(alg, text) == e);
  }
  CHECK(to_string(Element::zero(alg.alphabet())) == "0");
}

TEST_CASE("printing is canonical") {
  const Algebra alg = free_qi();
  CHECK(to_string(element(alg, "b*a + a*a*a - 2*a + i")) == "a^3 + b*a - 2*a + i");
  CHECK(to_string(element(alg, "(1+i)*c - c")) == "i*c");
  CHECK(to_string(element(alg, "-1/2*a*b")) == "-1/2*a*b");
}

TEST_CASE("linear span reduces exactly") {
  auto alph = make_alphabet(Ring::Rational, {"a", "b"});
  const Element a = Element::generator(alph, "a"), b = Element::generator(alph, "b");
  LinearSpan span(alph);
  CHECK(span.insert(a + b));
  CHECK(span.insert(a - b));
  CHECK_FALSE(span.insert(a));
  CHECK(span.contains(b.scaled(Scalar::rational(mpq_class(3, 7)))));
  CHECK_FALSE(span.contains(a * b));
  CHECK(span.dimension() == 2);
}
