#include "orecalc/skewquant.hpp"

#include "support.hpp"

using namespace orecalc;
using namespace orecalc::testing;

namespace {

std::size_t failures_with_prefix(const Report& r, std::string_view prefix) {
  std::size_t n = 0;
  for (const auto& item : r.items)
    if (!item.informational && !item.passed && item.label.find(prefix) != std::string::npos) ++n;
  return n;
}

const CheckItem* item_containing(const Report& r, std::string_view text) {
  for (const auto& item : r.items)
    if (item.label.find(text) != std::string::npos) return &item;
  return nullptr;
}

}  // namespace

TEST_CASE("adjoint is an antilinear involutive anti-automorphism") {
  StarAlgebraContext ctx = skewccr4_context();
  const AlphabetPtr& alph = ctx.algebra.alphabet();
  const Scalar i = Scalar::imaginary_unit();
  std::mt19937_64 rng(500);
  for (int k = 0; k < 500; ++k) {
    const Element a = random_element(alph, rng, 3, 3), b = random_element(alph, rng, 2, 2);
    CHECK(adjoint(ctx, adjoint(ctx, a)) == a);
    CHECK(adjoint(ctx, a.scaled(i)) == adjoint(ctx, a).scaled(-i));
    if (k % 5 == 0) CHECK(adjoint(ctx, a * b) == adjoint(ctx, b) * adjoint(ctx, a));
  }
}

TEST_CASE("adjoint with declared images") {
  auto alph = make_alphabet(Ring::Gaussian, {"a", "b", "h"});
  const Element a = Element::generator(alph, "a"), b = Element::generator(alph, "b");
  std::vector<bool> herm{false, false, true};
  std::vector<std::optional<Element>> images{b, a, std::nullopt};
  CHECK(adjoint(alph, herm, images, a * b) == a * b);
  CHECK(adjoint(alph, herm, images, a.scaled(Scalar::imaginary_unit())) ==
        b.scaled(Scalar::gaussian(0, -1)));
  images[0].reset();
  CHECK_THROWS_AS(adjoint(alph, herm, images, a), Error);
}

TEST_CASE("skewed relation residual normalizes to zero") {
  for (const auto& ctx : {ccr_context(), skewccr_context(), ccr4_context(), skewccr4_context(),
                          ccr4_context(kMostlyPlus), skewccr4_context(kMostlyPlus)}) {
    CAPTURE(ctx.algebra.name());
    for (std::size_t k = 0; k < ctx.pairs.size(); ++k) CHECK(normalize(ctx, skew_ccr_residual(ctx, k)).is_zero());
  }
}

TEST_CASE("normal forms of the one-pair contexts") {
  StarAlgebraContext plain = ccr_context(), skew = skewccr_context();
  const Presentation& p = skew.algebra;
  CHECK(to_string(normalize(plain, plain.algebra.gen("p") * plain.algebra.gen("l"))) == "l*p - i*hbar");
  CHECK(to_string(normalize(skew, p.gen("p") * p.gen("l"))) == "-l*p - i*hbar");
  CHECK(normalize(skew, p.gen("p") * p.gen("hbar")) == p.gen("hbar") * p.gen("p"));
}

TEST_CASE("adjoint descends to the unskewed relation") {
  StarAlgebraContext ctx = ccr4_context();
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    const Element a = random_element(ctx.algebra.alphabet(), rng, 3, 3);
    CHECK(normalize(ctx, adjoint(ctx, a)) == normalize(ctx, adjoint(ctx, normalize(ctx, a))));
  }
}

TEST_CASE("adjoint does not descend to the skewed relation") {
  StarAlgebraContext ctx = skewccr_context();
  // The residual is zero in the algebra but its adjoint is not.
  const Element r = skew_ccr_residual(ctx);
  REQUIRE(normalize(ctx, r).is_zero());
  const Element hbar = ctx.algebra.gen("hbar");
  CHECK(normalize(ctx, adjoint(ctx, r)) == hbar.scaled(Scalar::gaussian(0, -2)));
  Report asym = asym_conjugate_check(ctx);
  const CheckItem* note = item_containing(asym, "adjoint preserves relation");
  REQUIRE(note != nullptr);
  CHECK(note->informational);
  CHECK(note->detail.rfind("no", 0) == 0);
}

TEST_CASE("asym conjugate: identity and parity pass, the rotation twist fails") {
  CHECK(asym_conjugate_check(ccr_context()).passed());
  CHECK(asym_conjugate_check(skewccr_context()).passed());
  CHECK(asym_conjugate_check(ccr4_context()).passed());
  CHECK(asym_conjugate_check(skewccr4_context()).passed());
  Report bad = asym_conjugate_check(badtwist_context());
  CHECK_FALSE(bad.passed());
  CHECK(failures_with_prefix(bad, "adj(rot(l))") == 1);
  CHECK(failures_with_prefix(bad, "adj(p*l - alpha(l)*p)") == 1);
}

TEST_CASE("bilinears are twist invariant, same-index products are not") {
  for (const auto& eta : {kMostlyMinus, kMostlyPlus}) {
    StarAlgebraContext ctx = skewccr4_context(eta);
    Report r = bilinear_invariance_check(ctx);
    CAPTURE(r.to_text());
    CHECK(r.passed());
    const CheckItem* control = item_containing(r, "negative control");
    REQUIRE(control != nullptr);
    CHECK_FALSE(control->informational);
  }
  StarAlgebraContext ctx = skewccr4_context();
  StarAlgebraContext plain = ccr4_context();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Element skewed = normalize(ctx, ccr_lorentz(ctx, mu, nu));
      const Element unskewed = normalize(plain, ccr_lorentz(plain, mu, nu));
      CHECK(to_string(skewed) == to_string(unskewed));
    }
  CHECK(ccr_lorentz(ctx, 2, 2).is_zero());
  CHECK(normalize(ctx, ccr_lorentz(ctx, 1, 0) + ccr_lorentz(ctx, 0, 1)).is_zero());
}

TEST_CASE("Lorentz closure of the bilinears") {
  SUBCASE("unskewed: all 15 pairs close onto -i*hbar times the Lorentz brackets") {
    for (const auto& eta : {kMostlyMinus, kMostlyPlus}) {
      Report r = lorentz_closure_check(ccr4_context(eta));
      CHECK(r.passed());
      CHECK(r.items.size() >= 15);
    }
  }
  SUBCASE("parity-skewed: only the disjoint index pairs survive") {
    Report r = lorentz_closure_check(skewccr4_context());
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 12);
    for (const char* ok : {"[L01,L23]", "[L02,L13]", "[L03,L12]"}) {
      const CheckItem* item = item_containing(r, ok);
      REQUIRE(item != nullptr);
      CHECK(item->passed);
    }
    const CheckItem* bad = item_containing(r, "[L01,L02]");
    REQUIRE(bad != nullptr);
    CHECK_FALSE(bad->passed);
    CHECK(bad->detail.find("excess") != std::string::npos);
  }
}

TEST_CASE("full report for the one-pair skewed context") {
  Report r = skew_ccr_report(skewccr_context());
  CHECK(r.passed());
  CHECK(r.title == "check-skew-ccr skewccr");
  CHECK_FALSE(skew_ccr_report(badtwist_context()).passed());
}

TEST_CASE("parity images negate the pair generators only") {
  StarAlgebraContext ctx = skewccr4_context();
  const AlphabetPtr& alph = ctx.algebra.alphabet();
  for (const auto& [name, image] : parity_images(alph, ctx.pairs)) {
    CHECK(name != "hbar");
    CHECK(image == -Element::generator(alph, name));
  }
  CHECK(ctx.twist(ctx.algebra.gen("hbar")) == ctx.algebra.gen("hbar"));
}
