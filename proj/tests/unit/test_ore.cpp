#include "orecalc/ore.hpp"
#include "orecalc/pbw.hpp"

#include "support.hpp"

#include <functional>

using namespace orecalc;
using namespace orecalc::testing;

namespace {

// Independent oracle: operators on Q[t_1..t_n] acting on polynomials, so a
// normal form can be compared with the original word without any rewriting.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, mpq_class>;
using Op = std::function<Poly(const Poly&)>;

Op multiply_by(std::size_t var) {
  return [var](const Poly& f) {
    Poly out;
    for (const auto& [key, c] : f) {
      Exponents e = key;
      ++e[var];
      out[e] += c;
    }
    return out;
  };
}

// t^k -> weight(k) * t^(k-1) in variable `var`.
Op lower_by(std::size_t var, std::function<mpq_class(int)> weight) {
  return [var, weight](const Poly& f) {
    Poly out;
    for (const auto& [key, c] : f) {
      Exponents e = key;
      const int k = e[var];
      if (k == 0) continue;
      --e[var];
      out[e] += c * weight(k);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
}

Op derivative(std::size_t var) {
  return lower_by(var, [](int k) { return mpq_class(k); });
}

Poly act(const std::vector<Op>& ops, const Element& a, const Poly& f) {
  Poly out;
  for (const auto& [w, c] : a.terms()) {
    Poly g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) g = ops[*it](g);
    for (const auto& [e, v] : g) out[e] += v * c.re();
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Monomials of total degree <= 4 in `n` variables.
std::vector<Poly> probes(std::size_t n) {
  std::vector<Poly> out;
  std::function<void(Exponents, std::size_t, int)> rec = [&](Exponents e, std::size_t var, int left) {
    if (var == n) {
      out.push_back(Poly{{e, 1}});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      rec(e, var + 1, left - k);
    }
  };
  rec(Exponents(n, 0), 0, 4);
  return out;
}

bool same_operator(const std::vector<Op>& ops, std::size_t vars, const Element& a, const Element& b) {
  for (const auto& f : probes(vars))
    if (act(ops, a, f) != act(ops, b, f)) return false;
  return true;
}

OreExtension classical_weyl() {
  auto alph = make_alphabet(Ring::Rational, {"t"});
  Presentation base = commutative_presentation("Q[t]", alph);
  Endomorphism id = RingMap::identity(alph);
  return OreExtension::build({base, "x", id, AlphaDerivation("d/dt", id, {Element::one(alph)})});
}

OreExtension abelian_extension() {
  auto alph = make_alphabet(Ring::Rational, {"t"});
  Presentation base = commutative_presentation("Q[t]", alph);
  Endomorphism id = RingMap::identity(alph);
  return OreExtension::build({base, "x", id, AlphaDerivation::zero(id)});
}

Element gen(const Presentation& p, std::string_view n) { return p.gen(n); }

}  // namespace

TEST_CASE("classical Weyl algebra: x*t = t*x + 1") {
  OreExtension w = classical_weyl();
  const Presentation& p = w.presentation();
  const Element t = gen(p, "t"), x = gen(p, "x");
  CHECK(to_string(w.normalize(x * t)) == "t*x + 1");
  CHECK(w.normalize(t * x) == t * x);
}

TEST_CASE("golden: x^2 t^2 = t^2 x^2 + 4 t x + 2") {
  OreExtension w = classical_weyl();
  const Presentation& p = w.presentation();
  const Element t = gen(p, "t"), x = gen(p, "x");
  const Element lhs = power(x, 2) * power(t, 2);
  const Element nf = w.normalize(lhs);
  CHECK(to_string(nf) == "t^2*x^2 + 4*t*x + 2");
  // Differential operators on Q[t]: t multiplies, x differentiates.
  const std::vector<Op> ops{multiply_by(0), derivative(0)};
  CHECK(same_operator(ops, 1, lhs, nf));
  CHECK_FALSE(same_operator(ops, 1, lhs, power(t, 2) * power(x, 2)));
}

TEST_CASE("normal forms agree with differential operators on random elements") {
  std::vector<std::optional<TowerLevel>> none;
  WeylTower tower = build_weyl_tower(2, none);
  const AlphabetPtr& alph = tower.presentation().alphabet();
  // t1 < x1 < t2 < x2
  const std::vector<Op> ops{multiply_by(0), derivative(0), multiply_by(1), derivative(1)};
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 40; ++k) {
    Element a = random_element(alph, rng, 4, 4);
    CHECK(same_operator(ops, 2, a, tower.normalize(a)));
  }
}

TEST_CASE("normalization is idempotent and order independent on 100 random elements") {
  std::vector<std::optional<TowerLevel>> none;
  WeylTower tower = build_weyl_tower(2, none);
  const Presentation& p = tower.presentation();
  REQUIRE(p.pbw_type());
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const Element a = random_element(p.alphabet(), rng, 5, 5);
    const Element nf = tower.normalize(a);
    CAPTURE(to_string(a));
    CHECK(p.is_normal(nf));
    CHECK(tower.normalize(nf) == nf);
    RewriteOptions shuffled;
    shuffled.random_seed = 1000 + k;
    CHECK(rewrite_normal_form(p, a, shuffled) == nf);
    CHECK(pbw_normal_form_serial(p, a) == nf);
  }
}

TEST_CASE("normalization respects products") {
  std::vector<std::optional<TowerLevel>> none;
  WeylTower tower = build_weyl_tower(2, none);
  const AlphabetPtr& alph = tower.presentation().alphabet();
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    Element a = random_element(alph, rng, 3, 3), b = random_element(alph, rng, 3, 3);
    CHECK(tower.normalize(a * b) == tower.normalize(tower.normalize(a) * tower.normalize(b)));
  }
}

TEST_CASE("alpha = id and delta = 0 gives the commutative polynomial ring") {
  OreExtension ab = abelian_extension();
  const Presentation& p = ab.presentation();
  Presentation comm = commutative_presentation("Q[t,x]", p.alphabet());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 30; ++k) {
    Element a = random_element(p.alphabet(), rng, 4, 4);
    const Element nf = ab.normalize(a);
    CHECK(nf == rewrite_normal_form(comm, a));
    for (const auto& [w, c] : nf.terms()) CHECK(is_nondecreasing(w));
  }
}

TEST_CASE("tower of height 2 keeps the level-1 relations") {
  std::vector<std::optional<TowerLevel>> none;
  WeylTower tower = build_weyl_tower(2, none);
  const Presentation& top = tower.presentation();
  CHECK(top.alphabet()->names() == std::vector<std::string>{"t1", "x1", "t2", "x2"});
  const auto top_relations = top.relations();
  for (const auto& rel : tower.level(1).presentation().relations()) {
    CAPTURE(rel.label);
    auto it = std::find_if(top_relations.begin(), top_relations.end(),
                           [&](const Relation& r) { return r.label == rel.label; });
    REQUIRE(it != top_relations.end());
    CHECK(it->residual == relabel(rel.residual, top.alphabet()));
  }
  const Element t1 = top.gen("t1"), x1 = top.gen("x1"), t2 = top.gen("t2"), x2 = top.gen("x2");
  CHECK(tower.normalize(x1 * t1) == t1 * x1 + top.one());
  CHECK(tower.normalize(x2 * t2) == t2 * x2 + top.one());
  // delta_2 vanishes on level 1.
  CHECK(tower.normalize(x2 * t1) == t1 * x2);
  CHECK(tower.normalize(x2 * x1) == x1 * x2);
  CHECK(check_overlaps(top).passed());
}

TEST_CASE("skewed tower level: x1*t1 = -t1*x1 + 1") {
  std::vector<std::optional<TowerLevel>> levels(1);
  auto base = weyl_tower_base_alphabet(1, Ring::Rational);
  levels[0] = TowerLevel{{{"t1", -Element::generator(base, "t1")}}, {}};
  WeylTower tower = build_weyl_tower(1, levels);
  const Presentation& p = tower.presentation();
  const Element t = p.gen("t1"), x = p.gen("x1");
  CHECK(to_string(tower.normalize(x * t)) == "-t1*x1 + 1");
  CHECK(check_overlaps(p).passed());
  // x acts as t^k -> [k odd] t^(k-1), which satisfies x t + t x = 1.
  const std::vector<Op> ops{multiply_by(0), lower_by(0, [](int k) { return mpq_class(k % 2); })};
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    Element a = random_element(p.alphabet(), rng, 4, 4);
    CHECK(same_operator(ops, 1, a, tower.normalize(a)));
  }
}

TEST_CASE("incompatible Ore data is rejected") {
  std::vector<std::optional<TowerLevel>> levels(2);
  auto base2 = weyl_tower_base_alphabet(2, Ring::Rational);
  // alpha(t1) = -t1 breaks x1*t1 = t1*x1 + 1 at level 2.
  levels[1] = TowerLevel{{{"t1", -Element::generator(base2, "t1")}}, {}};
  CHECK_THROWS_AS(build_weyl_tower(2, levels), InvalidOreSpec);

  auto alph = make_alphabet(Ring::Rational, {"t"});
  Presentation base = commutative_presentation("Q[t]", alph);
  Endomorphism id = RingMap::identity(alph);
  const Element t = Element::generator(alph, "t");
  // delta raising degree by two cannot be normalized by a degree-bounded rule.
  CHECK_THROWS_AS(OreExtension::build({base, "x", id, AlphaDerivation("d", id, {t * t * t})}),
                  InvalidOreSpec);
  CHECK_THROWS_AS(OreExtension::build({base, "t", id, AlphaDerivation::zero(id)}), InvalidOreSpec);
}

TEST_CASE("rewrite cap is a hard error") {
  OreExtension w = classical_weyl();
  const Presentation& p = w.presentation();
  RewriteOptions tight;
  tight.max_rewrites = 3;
  CHECK_THROWS_AS(w.normalize(power(p.gen("x"), 4) * power(p.gen("t"), 4), tight), RewriteLimitExceeded);
}

TEST_CASE("holomorph split: central versus non-central") {
  SUBCASE("abelian, delta = 0") {
    OreExtension ab = abelian_extension();
    const Element t = Element::generator(ab.base().alphabet(), "t");
    Report r = holomorph_split_check(ab, std::span<const Element>(&t, 1));
    CHECK(r.passed());
  }
  SUBCASE("classical Weyl with V = span{t}") {
    OreExtension w = classical_weyl();
    const Element t = Element::generator(w.base().alphabet(), "t");
    Report r = holomorph_split_check(w, std::span<const Element>(&t, 1));
    CHECK_FALSE(r.passed());
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->detail.rfind("(x, t)", 0) == 0);
  }
  SUBCASE("V containing 1 is the whole base") {
    OreExtension w = classical_weyl();
    const AlphabetPtr& alph = w.base().alphabet();
    const std::vector<Element> v{Element::one(alph), Element::generator(alph, "t")};
    CHECK(holomorph_split_check(w, v).passed());
  }
}
