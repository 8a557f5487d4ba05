#include "orecalc/oracle.hpp"

#include "orecalc/pbw.hpp"

#include <random>

namespace orecalc {

RepMatrix::RepMatrix(std::size_t dim, Ring ring)
    : dim_(dim), ring_(ring), entries_(dim * dim, Scalar::from_int(ring, 0)) {}

RepMatrix RepMatrix::identity(std::size_t dim, Ring ring) {
  RepMatrix m(dim, ring);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = Scalar::from_int(ring, 1);
  return m;
}

bool RepMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

void RepMatrix::require_compatible(const RepMatrix& other) const {
  if (dim_ != other.dim_)
    throw Error("matrix dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
  if (ring_ != other.ring_) throw RingMismatch("matrices over different rings");
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

RepMatrix& RepMatrix::operator-=(const RepMatrix& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

RepMatrix RepMatrix::scaled(const Scalar& c) const {
  RepMatrix out = *this;
  const Scalar k = c.in(ring_);
  for (auto& e : out.entries_) e *= k;
  return out;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  a.require_compatible(b);
  const std::size_t n = a.dim_;
  RepMatrix out(n, a.ring_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!b.at(k, c).is_zero()) out.at(r, c) += x * b.at(k, c);
    }
  return out;
}

bool operator==(const RepMatrix& a, const RepMatrix& b) {
  return a.dim_ == b.dim_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

std::string RepMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < dim_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < dim_; ++c) out += (c ? ", " : "") + at(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

RepMatrix matrix_commutator(const RepMatrix& a, const RepMatrix& b) { return a * b - b * a; }

namespace {

RepMatrix word_matrix(const Representation& rep, const Word& w, const Scalar& c) {
  RepMatrix m = RepMatrix::identity(rep.dim, rep.alphabet->ring()).scaled(c);
  for (Letter g : w) {
    const auto& img = rep.images.at(g);
    if (!img)
      throw Error("representation '" + rep.name + "' has no image for " + rep.alphabet->name(g));
    m = m * *img;
  }
  return m;
}

}  // namespace

RepMatrix evaluate_serial(const Representation& rep, const Element& a) {
  Element src = relabel(a, rep.alphabet);
  RepMatrix out(rep.dim, rep.alphabet->ring());
  for (const auto& [w, c] : src.terms()) out += word_matrix(rep, w, c);
  return out;
}

RepMatrix evaluate(const Representation& rep, const Element& a) {
  Element src = relabel(a, rep.alphabet);
  std::vector<std::pair<Word, Scalar>> terms(src.terms().begin(), src.terms().end());
  RepMatrix total(rep.dim, rep.alphabet->ring());
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  std::string failure;
#pragma omp parallel
  {
    RepMatrix partial(rep.dim, rep.alphabet->ring());
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      try {
        const auto& [w, c] = terms[static_cast<std::size_t>(k)];
        partial += word_matrix(rep, w, c);
      } catch (const Error& e) {
#pragma omp critical(orecalc_eval_error)
        failure = e.what();
      }
    }
#pragma omp critical(orecalc_eval_merge)
    total += partial;
  }
  if (!failure.empty()) throw Error(failure);
  return total;
}

Report rep_validate(const Representation& rep, const LiePresentation& p) {
  Report report;
  report.title = "representation " + rep.name + " of " + p.name();
  const AlphabetPtr& alph = p.alphabet();
  std::size_t pairs = 0, bad = 0;
  for (Letter a = 0; a < alph->size(); ++a)
    for (Letter b = a + 1; b < alph->size(); ++b) {
      ++pairs;
      RepMatrix symbolic = evaluate_serial(rep, p.bracket(a, b));
      RepMatrix matrix = matrix_commutator(evaluate_serial(rep, p.gen(alph->name(a))),
                                           evaluate_serial(rep, p.gen(alph->name(b))));
      if (!(symbolic == matrix)) {
        ++bad;
        report.add("[" + alph->name(a) + "," + alph->name(b) + "]", false,
                   "bracket " + to_string(p.bracket(a, b)) + " evaluates to " + symbolic.to_string() +
                       ", matrix commutator is " + matrix.to_string());
      }
    }
  report.add("generator pairs matching the matrix commutator", bad == 0,
             std::to_string(pairs - bad) + "/" + std::to_string(pairs));
  return report;
}

Report pbw_oracle_equivalence(const LiePresentation& p, const Representation& rep, const Element& a) {
  Report report;
  report.title = "PBW oracle";
  Element nf = pbw_normal_form(p, a);
  const bool ok = evaluate_serial(rep, a) == evaluate_serial(rep, nf);
  report.add(to_string(a) + " -> " + to_string(nf), ok);
  return report;
}

std::vector<Element> random_words(const AlphabetPtr& alphabet, std::size_t count, std::size_t max_degree,
                                  std::uint64_t seed) {
  if (alphabet->size() == 0 || max_degree == 0) throw Error("random words need generators and degree >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Element> out;
  for (std::size_t k = 0; k < count; ++k) {
    Word w(1 + rng() % max_degree);
    for (auto& g : w) g = static_cast<Letter>(rng() % alphabet->size());
    out.push_back(Element::monomial(alphabet, std::move(w), Scalar::from_int(alphabet->ring(), 1)));
  }
  return out;
}

Report pbw_oracle_suite(const LiePresentation& p, const Representation& rep, std::size_t count,
                        std::size_t max_degree, std::uint64_t seed) {
  Report report;
  report.title = "PBW oracle on random words";
  std::vector<Element> words = random_words(p.alphabet(), count, max_degree, seed);
  std::vector<Element> normal = pbw_normalize_batch(p.presentation(), words);
  std::vector<char> ok(words.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    ok[i] = evaluate_serial(rep, words[i]) == evaluate_serial(rep, normal[i]);
  }
  std::size_t good = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (ok[k]) {
      ++good;
    } else {
      report.add("case " + std::to_string(k), false, to_string(words[k]) + " -> " + to_string(normal[k]));
    }
  }
  report.add("random words of degree <= " + std::to_string(max_degree) + " (seed " + std::to_string(seed) + ")",
             good == words.size(), std::to_string(good) + "/" + std::to_string(words.size()));
  return report;
}

Report ad_check(const Representation& rep, const LiePresentation& p, Letter a) {
  Report report;
  const AlphabetPtr& alph = p.alphabet();
  report.title = "ad(" + alph->name(a) + ")";
  RepMatrix A = evaluate_serial(rep, p.gen(alph->name(a)));
  for (Letter g = 0; g < alph->size(); ++g) {
    RepMatrix symbolic = evaluate_serial(rep, p.bracket(a, g));
    RepMatrix matrix = matrix_commutator(A, evaluate_serial(rep, p.gen(alph->name(g))));
    report.add("[" + alph->name(a) + "," + alph->name(g) + "]", symbolic == matrix,
               symbolic == matrix ? "" : symbolic.to_string() + " vs " + matrix.to_string());
  }
  return report;
}

Report morphism_check(const Representation& rep, std::size_t count, std::uint64_t seed) {
  Report report;
  report.title = "evaluate is a ring morphism";
  std::mt19937_64 rng(seed);
  const Ring ring = rep.alphabet->ring();
  auto random_element = [&] {
    Element e(rep.alphabet);
    std::size_t terms = 1 + rng() % 3;
    for (std::size_t t = 0; t < terms; ++t) {
      Word w(rng() % 4);
      for (auto& g : w) g = static_cast<Letter>(rng() % rep.alphabet->size());
      long re = static_cast<long>(rng() % 7) - 3;
      long im = ring == Ring::Gaussian ? static_cast<long>(rng() % 5) - 2 : 0;
      e.add_term(w, Scalar(ring, re, im));
    }
    return e;
  };
  std::size_t good = 0;
  for (std::size_t k = 0; k < count; ++k) {
    Element a = random_element(), b = random_element();
    RepMatrix ea = evaluate(rep, a), eb = evaluate(rep, b);
    if (evaluate(rep, a * b) == ea * eb && evaluate(rep, a + b) == ea + eb) ++good;
  }
  report.add("random pairs", good == count, std::to_string(good) + "/" + std::to_string(count));
  return report;
}

Representation vector_rep(const LiePresentation& so13p) {
  const Metric eta = so13p.metric().value_or(kMostlyMinus);
  Representation rep{"vector", so13p.alphabet(), 4, {}};
  rep.images.resize(so13p.dimension());
  const Scalar i = Scalar::imaginary_unit();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      RepMatrix m(4, Ring::Gaussian);
      for (int rho = 0; rho < 4; ++rho)
        for (int sigma = 0; sigma < 4; ++sigma) {
          int v = (mu == sigma && rho == nu ? eta[static_cast<std::size_t>(mu)] : 0) -
                  (nu == sigma && rho == mu ? eta[static_cast<std::size_t>(nu)] : 0);
          if (v) m.at(static_cast<std::size_t>(rho), static_cast<std::size_t>(sigma)) = i * Scalar::from_int(Ring::Gaussian, v);
        }
      rep.images[so13p.alphabet()->index(lorentz_name(mu, nu))] = std::move(m);
    }
  return rep;
}

Representation affine_rep(const LiePresentation& iso) {
  LiePresentation lorentz = so13(iso.metric().value_or(kMostlyMinus));
  Representation vec = vector_rep(lorentz);
  Representation rep{"affine", iso.alphabet(), 5, {}};
  rep.images.resize(iso.dimension());
  for (Letter g = 0; g < lorentz.dimension(); ++g) {
    RepMatrix m(5, Ring::Gaussian);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = vec.images[g]->at(r, c);
    rep.images[iso.alphabet()->index(lorentz.alphabet()->name(g))] = std::move(m);
  }
  for (std::size_t rho = 0; rho < 4; ++rho) {
    RepMatrix m(5, Ring::Gaussian);
    m.at(rho, 4) = Scalar::from_int(Ring::Gaussian, 1);
    rep.images[iso.alphabet()->index("P" + std::to_string(rho))] = std::move(m);
  }
  return rep;
}

Representation transported_rep(std::string name, const Representation& rep, const RingMap& to_rep_basis) {
  Representation out{std::move(name), to_rep_basis.source(), rep.dim, {}};
  for (Letter g = 0; g < out.alphabet->size(); ++g)
    out.images.push_back(evaluate_serial(rep, to_rep_basis.image(g)));
  return out;
}

std::optional<Representation> shipped_rep(const LiePresentation& p) {
  const Metric eta = p.metric().value_or(kMostlyMinus);
  auto matches = [&](const LiePresentation& builtin) {
    return p.name() == builtin.name() && *p.alphabet() == *builtin.alphabet();
  };
  LiePresentation lorentz = so13(eta);
  if (matches(lorentz)) return vector_rep(p);
  if (matches(iso13(eta))) return affine_rep(p);
  if (matches(so13jk(eta)))
    return transported_rep("vector(J,K)", vector_rep(lorentz), jk_to_lorentz(p.alphabet(), lorentz.alphabet()));
  if (matches(su2su2(eta)))
    return transported_rep("vector(N,M)", vector_rep(lorentz), nm_to_lorentz(p.alphabet(), lorentz.alphabet()));
  return std::nullopt;
}

Report oracle_report(const LiePresentation& p, const Representation& rep) {
  Report report;
  report.title = "oracle " + p.name() + " (" + rep.name + ", dim " + std::to_string(rep.dim) + ")";
  report.append(rep_validate(rep, p));
  for (Letter g = 0; g < p.dimension(); ++g) report.append(ad_check(rep, p, g));
  report.append(pbw_oracle_suite(p, rep));
  report.append(morphism_check(rep));
  return report;
}

}  // namespace orecalc
