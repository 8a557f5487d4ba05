#include "orecalc/oracle.hpp"

#include "support.hpp"

using namespace orecalc;
using namespace orecalc::testing;

namespace {

const Scalar kI = Scalar::imaginary_unit();

// Independent oracle: (L_{mu nu})^rho_sigma filled in entry by entry.
RepMatrix hand_vector_matrix(int mu, int nu, const Metric& eta) {
  RepMatrix m(4, Ring::Gaussian);
  for (int rho = 0; rho < 4; ++rho)
    for (int sigma = 0; sigma < 4; ++sigma) {
      long v = 0;
      if (rho == nu && sigma == mu) v += eta[mu];
      if (rho == mu && sigma == nu) v -= eta[nu];
      m.at(rho, sigma) = Scalar::gaussian(0, v);
    }
  return m;
}

}  // namespace

TEST_CASE("matrix algebra") {
  RepMatrix a(2, Ring::Gaussian), b(2, Ring::Gaussian);
  a.at(0, 1) = Scalar::gaussian(1, 0);
  b.at(1, 0) = Scalar::gaussian(1, 0);
  RepMatrix c = matrix_commutator(a, b);
  CHECK(c.at(0, 0) == Scalar::gaussian(1, 0));
  CHECK(c.at(1, 1) == Scalar::gaussian(-1, 0));
  CHECK(c.to_string() == "[[1, 0], [0, -1]]");
  CHECK((a * RepMatrix::identity(2, Ring::Gaussian)) == a);
  CHECK((a - a).is_zero());
  CHECK(a.scaled(kI).at(0, 1) == kI);
  CHECK_THROWS_AS(a + RepMatrix(3, Ring::Gaussian), Error);
}

TEST_CASE("vector representation entries") {
  for (const auto& eta : {kMostlyMinus, kMostlyPlus}) {
    LiePresentation so = so13(eta);
    Representation rep = vector_rep(so);
    REQUIRE(rep.dim == 4);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        const Element g = so.gen(lorentz_name(mu, nu));
        CHECK(evaluate(rep, g) == hand_vector_matrix(mu, nu, eta));
      }
  }
}

TEST_CASE("evaluate on simple elements") {
  LiePresentation so = so13();
  Representation rep = vector_rep(so);
  CHECK(evaluate(rep, so.presentation().one()) == RepMatrix::identity(4, Ring::Gaussian));
  CHECK(evaluate(rep, so.presentation().zero()).is_zero());
  // [L01, L12] - i L02 is zero in the algebra, so its matrix is zero.
  const Element e = commutator(so.gen("L01"), so.gen("L12")) - so.gen("L02").scaled(kI);
  CHECK(evaluate(rep, e).is_zero());
  CHECK_FALSE(evaluate(rep, commutator(so.gen("L01"), so.gen("L12"))).is_zero());
}

TEST_CASE("serial and parallel evaluation agree") {
  LiePresentation iso = iso13();
  Representation rep = affine_rep(iso);
  std::mt19937_64 rng(44);
  for (int k = 0; k < 20; ++k) {
    const Element a = random_element(iso.alphabet(), rng, 40, 4);
    CHECK(evaluate(rep, a) == evaluate_serial(rep, a));
  }
}

TEST_CASE("shipped representations validate") {
  for (const auto& p : {so13(), iso13(), so13jk(), su2su2(), so13(kMostlyPlus)}) {
    CAPTURE(p.name());
    auto rep = shipped_rep(p);
    REQUIRE(rep.has_value());
    CHECK(rep_validate(*rep, p).passed());
    CHECK(morphism_check(*rep, 20, 3).passed());
  }
}

TEST_CASE("negated matrices fail rep_validate") {
  LiePresentation so = so13();
  Representation rep = vector_rep(so);
  for (auto& m : rep.images) m = m->scaled(Scalar::gaussian(-1, 0));
  Report r = rep_validate(rep, so);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure() != nullptr);
}

TEST_CASE("trivial representation of an abelian algebra") {
  auto alph = make_alphabet(Ring::Rational, {"a", "b"});
  LiePresentation ab("abelian", alph, {});
  Representation rep{"zero", alph, 1, {RepMatrix(1, Ring::Rational), RepMatrix(1, Ring::Rational)}};
  CHECK(rep_validate(rep, ab).passed());
  CHECK(evaluate(rep, ab.presentation().one()) == RepMatrix::identity(1, Ring::Rational));
  CHECK(pbw_oracle_suite(ab, rep, 20, 3, 1).passed());
}

TEST_CASE("missing images are reported when used") {
  LiePresentation so = so13();
  Representation rep = vector_rep(so);
  rep.images[0].reset();
  CHECK_THROWS_AS(evaluate(rep, so.gen("L01")), Error);
  CHECK(evaluate(rep, so.gen("L02")) == hand_vector_matrix(0, 2, kMostlyMinus));
}

TEST_CASE("random words are deterministic") {
  LiePresentation so = so13();
  auto a = random_words(so.alphabet(), 200, 4, 20240101);
  auto b = random_words(so.alphabet(), 200, 4, 20240101);
  REQUIRE(a.size() == 200);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == b[k]);
    CHECK(filtration_degree(a[k]) >= 1);
    CHECK(filtration_degree(a[k]) <= 4);
  }
}

TEST_CASE("PBW oracle on 200 random words") {
  LiePresentation so = so13();
  Representation rep = vector_rep(so);
  Report r = pbw_oracle_suite(so, rep);
  CHECK(r.passed());
  LiePresentation iso = iso13();
  CHECK(pbw_oracle_suite(iso, affine_rep(iso), 100, 4, 5).passed());
}

TEST_CASE("ad check and full oracle report") {
  LiePresentation so = so13();
  Representation rep = vector_rep(so);
  for (Letter g = 0; g < 6; ++g) CHECK(ad_check(rep, so, g).passed());
  Report r = oracle_report(so, rep);
  CHECK(r.passed());
  CHECK(r.title == "oracle so13 (vector, dim 4)");
}
