#include "orecalc/algebra.hpp"

#include "orecalc/ore.hpp"
#include "orecalc/pbw.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace orecalc {

using json = nlohmann::ordered_json;

// --- JSON ---------------------------------------------------------------------

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw AlgebraFileError(where + ": " + what);
}

void allow_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> keys) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) schema_error(where, "unknown key '" + key + "'");
  }
}

std::string get_string(const json& obj, const std::string& where, const char* key, bool required = true,
                       std::string fallback = {}) {
  if (!obj.contains(key)) {
    if (required) schema_error(where, std::string("missing '") + key + "'");
    return fallback;
  }
  if (!obj[key].is_string()) schema_error(where, std::string("'") + key + "' must be a string");
  return obj[key].get<std::string>();
}

bool get_bool(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) return false;
  if (!obj[key].is_boolean()) schema_error(where, std::string("'") + key + "' must be true or false");
  return obj[key].get<bool>();
}

const json& get_array(const json& obj, const std::string& where, const char* key) {
  static const json empty = json::array();
  if (!obj.contains(key)) return empty;
  if (!obj[key].is_array()) schema_error(where, std::string("'") + key + "' must be an array");
  return obj[key];
}

// {"name": "value", ...} keeping file order.
std::vector<NamedText> get_map(const json& obj, const std::string& where, const char* key) {
  std::vector<NamedText> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_object()) schema_error(where, std::string("'") + key + "' must be an object");
  for (const auto& [name, value] : obj[key].items()) {
    if (!value.is_string()) schema_error(where + "." + key, "value of '" + name + "' must be a string");
    out.push_back({name, value.get<std::string>()});
  }
  return out;
}

json to_map(const std::vector<NamedText>& entries) {
  json out = json::object();
  for (const auto& e : entries) out[e.name] = e.value;
  return out;
}

}  // namespace

std::string print_algebra_file(const AlgebraFile& f) {
  json j;
  j["schema_version"] = f.schema_version;
  j["name"] = f.name;
  j["ground_ring"] = f.ground_ring;
  if (!f.metric.empty()) j["metric"] = f.metric;
  json gens = json::array();
  for (const auto& g : f.generators) {
    if (!g.hermitian && g.adjoint.empty()) {
      gens.push_back(g.name);
      continue;
    }
    json o;
    o["name"] = g.name;
    if (g.hermitian) o["hermitian"] = true;
    if (!g.adjoint.empty()) o["adjoint"] = g.adjoint;
    gens.push_back(o);
  }
  j["generators"] = gens;
  if (!f.definitions.empty()) j["definitions"] = to_map(f.definitions);
  if (!f.endomorphisms.empty()) {
    json endos = json::array();
    for (const auto& e : f.endomorphisms) {
      json o;
      o["name"] = e.name;
      o["images"] = to_map(e.images);
      if (e.antilinear) o["antilinear"] = true;
      endos.push_back(o);
    }
    j["endomorphisms"] = endos;
  }
  const RelationsSpec& r = f.relations;
  json rel;
  rel["kind"] = r.kind;
  if (r.kind == "lie") {
    json br = json::array();
    for (const auto& b : r.brackets) br.push_back(json::array({b.left, b.right, b.value}));
    rel["brackets"] = br;
  } else if (r.kind == "ore") {
    rel["base"] = r.base;
    json ext = json::array();
    for (const auto& e : r.extensions) {
      json o;
      o["generator"] = e.generator;
      if (!e.twist.empty()) o["twist"] = to_map(e.twist);
      if (!e.derivation.empty()) o["derivation"] = to_map(e.derivation);
      ext.push_back(o);
    }
    rel["extensions"] = ext;
  } else if (r.kind == "skew_ccr") {
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back(json{{"p", p.p}, {"l", p.l}, {"eta", p.eta}});
    rel["pairs"] = pairs;
    rel["twist"] = r.twist;
  }
  j["relations"] = rel;
  return j.dump(2) + "\n";
}

AlgebraFile parse_algebra_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraFileError(std::string("invalid JSON: ") + e.what());
  }
  allow_keys(j, "algebra", {"schema_version", "name", "ground_ring", "metric", "generators", "definitions",
                            "endomorphisms", "relations"});
  AlgebraFile f;
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    schema_error("algebra", "'schema_version' must be an integer");
  f.schema_version = j["schema_version"].get<int>();
  if (f.schema_version != kSchemaVersion)
    schema_error("algebra", "unsupported schema_version " + std::to_string(f.schema_version));
  f.name = get_string(j, "algebra", "name");
  f.ground_ring = get_string(j, "algebra", "ground_ring");
  f.metric = get_string(j, "algebra", "metric", false);
  if (f.ground_ring != "Q" && f.ground_ring != "Qi")
    schema_error("algebra", "ground_ring must be \"Q\" or \"Qi\", not \"" + f.ground_ring + "\"");
  if (!f.metric.empty()) {
    try {
      parse_metric(f.metric);
    } catch (const Error& e) {
      schema_error("algebra", e.what());
    }
  }

  for (const auto& g : get_array(j, "algebra", "generators")) {
    if (g.is_string()) {
      f.generators.push_back({g.get<std::string>(), false, {}});
      continue;
    }
    allow_keys(g, "generators", {"name", "hermitian", "adjoint"});
    f.generators.push_back({get_string(g, "generators", "name"), get_bool(g, "generators", "hermitian"),
                            get_string(g, "generators", "adjoint", false)});
  }
  f.definitions = get_map(j, "algebra", "definitions");
  for (const auto& e : get_array(j, "algebra", "endomorphisms")) {
    allow_keys(e, "endomorphisms", {"name", "images", "antilinear"});
    f.endomorphisms.push_back({get_string(e, "endomorphisms", "name"), get_map(e, "endomorphisms", "images"),
                               get_bool(e, "endomorphisms", "antilinear")});
  }

  if (!j.contains("relations")) schema_error("algebra", "missing 'relations'");
  const json& rel = j["relations"];
  allow_keys(rel, "relations", {"kind", "brackets", "base", "extensions", "pairs", "twist"});
  RelationsSpec& r = f.relations;
  r.kind = get_string(rel, "relations", "kind");
  if (r.kind == "lie") {
    for (const auto& b : get_array(rel, "relations", "brackets")) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_string() || !b[1].is_string() || !b[2].is_string())
        schema_error("relations.brackets", "each entry must be [left, right, value] strings");
      r.brackets.push_back({b[0].get<std::string>(), b[1].get<std::string>(), b[2].get<std::string>()});
    }
  } else if (r.kind == "ore") {
    r.base = get_string(rel, "relations", "base", false, "commutative");
    for (const auto& e : get_array(rel, "relations", "extensions")) {
      allow_keys(e, "relations.extensions", {"generator", "twist", "derivation"});
      r.extensions.push_back({get_string(e, "relations.extensions", "generator"),
                              get_map(e, "relations.extensions", "twist"),
                              get_map(e, "relations.extensions", "derivation")});
    }
  } else if (r.kind == "skew_ccr") {
    for (const auto& p : get_array(rel, "relations", "pairs")) {
      allow_keys(p, "relations.pairs", {"p", "l", "eta"});
      int eta = 1;
      if (p.contains("eta")) {
        if (!p["eta"].is_number_integer() || (p["eta"] != 1 && p["eta"] != -1))
          schema_error("relations.pairs", "'eta' must be 1 or -1");
        eta = p["eta"].get<int>();
      }
      r.pairs.push_back({get_string(p, "relations.pairs", "p"), get_string(p, "relations.pairs", "l"), eta});
    }
    r.twist = get_string(rel, "relations", "twist", false, "id");
  } else if (r.kind != "free" && r.kind != "commutative") {
    schema_error("relations", "unknown kind '" + r.kind + "' (free, commutative, lie, ore, skew_ccr)");
  }
  return f;
}

// --- Activation -------------------------------------------------------------------

const RingMap* Algebra::endomorphism(std::string_view name) const {
  auto it = endomorphisms_.find(name);
  return it == endomorphisms_.end() ? nullptr : &it->second;
}

const Element* Algebra::definition(std::string_view name) const {
  auto it = definitions_.find(name);
  return it == definitions_.end() ? nullptr : &it->second;
}

Element Algebra::adjoint(const Element& a) const {
  return orecalc::adjoint(alphabet_, hermitian_, adjoints_, a);
}

Element Algebra::normalize(const Element& a) const {
  constexpr std::size_t kParallelThreshold = 64;
  const Presentation& p = *presentation_;
  if (!p.pbw_type()) return rewrite_normal_form(p, a);
  if (a.size() >= kParallelThreshold) return pbw_normal_form_parallel(p, a);
  return pbw_normal_form_serial(p, a);
}

Element Algebra::elaborate(const Expr& e) const {
  const AlphabetPtr& alph = alphabet_;
  auto twist = [&](const Expr& node) -> const RingMap& {
    if (const RingMap* m = endomorphism(node.name)) return *m;
    throw ParseError(node.pos, "unknown endomorphism '" + node.name + "'");
  };
  switch (e.kind) {
    case Expr::Kind::Number:
      return Element::constant(alph, Scalar(alph->ring(), e.value));
    case Expr::Kind::Symbol:
      if (auto g = alph->find(e.name)) return Element::generator(alph, *g);
      if (const Element* d = definition(e.name)) return *d;
      if (e.name == "i") {
        if (alph->ring() != Ring::Gaussian)
          throw RingMismatch(to_string(e.pos) + ": 'i' needs ground ring Qi, '" + name() + "' is over " +
                             std::string(ring_name(alph->ring())));
        return Element::constant(alph, Scalar::imaginary_unit());
      }
      throw ParseError(e.pos, "unknown symbol '" + e.name + "' in '" + name() + "'");
    case Expr::Kind::Sum: {
      Element out(alph);
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        Element term = elaborate(*e.args[k]);
        if (e.signs[k] < 0)
          out -= term;
        else
          out += term;
      }
      return out;
    }
    case Expr::Kind::Product: {
      Element out = elaborate(*e.args[0]);
      for (std::size_t k = 1; k < e.args.size(); ++k) out = out * elaborate(*e.args[k]);
      return out;
    }
    case Expr::Kind::Power:
      return power(elaborate(*e.args[0]), e.exponent);
    case Expr::Kind::Commutator:
      return commutator(elaborate(*e.args[0]), elaborate(*e.args[1]));
    case Expr::Kind::SkewLeft:
      return skew_commutator_left(elaborate(*e.args[0]), elaborate(*e.args[1]), twist(e));
    case Expr::Kind::SkewRight:
      return skew_commutator_right(elaborate(*e.args[0]), elaborate(*e.args[1]), twist(e));
    case Expr::Kind::Adjoint:
      return adjoint(elaborate(*e.args[0]));
    case Expr::Kind::Apply:
      return twist(e).apply(elaborate(*e.args[0]));
  }
  throw Error("unreachable expression kind");
}

Element Algebra::evaluate(std::string_view text) const {
  return normalize(elaborate(*parse_expression(text)));
}

namespace {

// Element text that must parse in the partially loaded algebra.
Element element_from(const Algebra& a, const std::string& where, const std::string& text) {
  try {
    return a.elaborate(*parse_expression(text));
  } catch (const Error& e) {
    throw AlgebraFileError(where + ": " + e.what());
  }
}

std::vector<std::pair<std::string, Element>> images_from(const Algebra& a, const std::string& where,
                                                         const std::vector<NamedText>& entries,
                                                         const AlphabetPtr& domain) {
  std::vector<std::pair<std::string, Element>> out;
  std::set<std::string> seen;
  for (const auto& [gen, value] : entries) {
    if (!domain->find(gen)) throw AlgebraFileError(where + ": '" + gen + "' is not a generator here");
    if (!seen.insert(gen).second) throw AlgebraFileError(where + ": '" + gen + "' listed twice");
    out.emplace_back(gen, element_from(a, where + "." + gen, value));
  }
  return out;
}

}  // namespace

Algebra Algebra::load(const AlgebraFile& f) {
  Algebra a;
  a.file_ = f;
  if (f.schema_version != kSchemaVersion)
    throw AlgebraFileError("unsupported schema_version " + std::to_string(f.schema_version));
  if (f.name.empty()) throw AlgebraFileError("algebra name is empty");
  Ring ring;
  std::vector<std::string> names;
  try {
    ring = parse_ring(f.ground_ring);
    for (const auto& g : f.generators) names.push_back(g.name);
    a.alphabet_ = make_alphabet(ring, names);
    if (!f.metric.empty()) parse_metric(f.metric);
  } catch (const AlgebraFileError&) {
    throw;
  } catch (const Error& e) {
    throw AlgebraFileError(e.what());
  }
  const AlphabetPtr& alph = a.alphabet_;
  a.endomorphisms_.emplace("id", RingMap::identity(alph));

  for (const auto& d : f.definitions) {
    if (alph->find(d.name) || d.name == "i" || a.definitions_.count(d.name))
      throw AlgebraFileError("definition '" + d.name + "' clashes with an existing symbol");
    Element value = element_from(a, "definitions." + d.name, d.value);
    a.definitions_.emplace(d.name, std::move(value));
  }

  a.hermitian_.assign(alph->size(), false);
  a.adjoints_.assign(alph->size(), std::nullopt);
  for (Letter g = 0; g < alph->size(); ++g) {
    const GeneratorSpec& spec = f.generators[g];
    a.hermitian_[g] = spec.hermitian;
    if (!spec.adjoint.empty()) {
      if (spec.hermitian) throw AlgebraFileError("generator '" + spec.name + "' is hermitian and has an adjoint");
      a.adjoints_[g] = element_from(a, "generators." + spec.name + ".adjoint", spec.adjoint);
    }
  }

  std::vector<std::pair<std::string, std::vector<std::pair<std::string, Element>>>> endo_images;
  for (const auto& e : f.endomorphisms) {
    if (e.name == "id" || e.name == "adj" || e.name == "skewL" || e.name == "skewR")
      throw AlgebraFileError("endomorphism name '" + e.name + "' is reserved");
    auto images = images_from(a, "endomorphisms." + e.name, e.images, alph);
    auto [it, fresh] = a.endomorphisms_.emplace(e.name, RingMap::from_images(e.name, alph, images, e.antilinear));
    if (!fresh) throw AlgebraFileError("endomorphism '" + e.name + "' defined twice");
    endo_images.emplace_back(e.name, std::move(images));
  }

  const RelationsSpec& r = f.relations;
  try {
    if (r.kind == "free") {
      a.presentation_.emplace(f.name, alph);
    } else if (r.kind == "commutative") {
      a.presentation_ = commutative_presentation(f.name, alph);
    } else if (r.kind == "lie") {
      std::vector<BracketEntry> brackets;
      for (const auto& b : r.brackets) {
        const std::string where = "relations.brackets[" + b.left + "," + b.right + "]";
        auto left = alph->find(b.left), right = alph->find(b.right);
        if (!left || !right) throw AlgebraFileError(where + ": unknown generator");
        brackets.push_back({*left, *right, element_from(a, where, b.value)});
      }
      std::optional<Metric> metric;
      if (!f.metric.empty()) metric = parse_metric(f.metric);
      a.lie_.emplace(f.name, alph, brackets, metric);
      a.presentation_ = a.lie_->presentation();
    } else if (r.kind == "ore") {
      std::vector<std::string> base_names;
      const std::size_t nbase = alph->size() - r.extensions.size();
      if (r.extensions.size() > alph->size()) throw AlgebraFileError("more Ore extensions than generators");
      for (std::size_t k = 0; k < alph->size(); ++k) {
        if (k >= nbase && r.extensions[k - nbase].generator != alph->name(static_cast<Letter>(k)))
          throw AlgebraFileError("Ore variables must be the last generators, in extension order");
        if (k < nbase) base_names.push_back(alph->name(static_cast<Letter>(k)));
      }
      AlphabetPtr base_alph = make_alphabet(ring, base_names);
      if (r.base != "commutative" && r.base != "free")
        throw AlgebraFileError("relations.base must be free or commutative");
      Presentation current = r.base == "commutative" ? commutative_presentation(f.name, base_alph)
                                                     : Presentation(f.name, base_alph);
      for (const auto& ext : r.extensions) {
        const std::string where = "relations.extensions." + ext.generator;
        const AlphabetPtr& cur = current.alphabet();
        auto twist = images_from(a, where + ".twist", ext.twist, cur);
        for (auto& [gen, img] : twist) img = relabel(img, cur);
        Endomorphism alpha = Endomorphism::from_images("alpha_" + ext.generator, cur, twist);
        std::vector<Element> dimages(cur->size(), Element::zero(cur));
        for (auto& [gen, img] : images_from(a, where + ".derivation", ext.derivation, cur))
          dimages[cur->index(gen)] = relabel(img, cur);
        AlphaDerivation delta("delta_" + ext.generator, alpha, std::move(dimages));
        current = OreExtension::build({current, ext.generator, alpha, delta}).presentation();
      }
      a.presentation_ = current.extended(f.name, alph);
    } else if (r.kind == "skew_ccr") {
      std::vector<CcrPair> pairs;
      for (const auto& p : r.pairs) pairs.push_back({p.p, p.l, p.eta});
      std::vector<std::pair<std::string, Element>> twist;
      if (r.twist != "id") {
        auto it = std::find_if(endo_images.begin(), endo_images.end(),
                               [&](const auto& e) { return e.first == r.twist; });
        if (it == endo_images.end()) throw AlgebraFileError("relations.twist: unknown endomorphism '" + r.twist + "'");
        twist = it->second;
      }
      std::optional<Metric> metric;
      if (!f.metric.empty()) metric = parse_metric(f.metric);
      StarAlgebraContext ctx = make_ccr_context(f.name, pairs, twist, metric, r.twist);
      if (ctx.algebra.alphabet()->names() != alph->names())
        throw AlgebraFileError("skew_ccr generators must be listed as hbar, then every l, then every p");
      a.presentation_ = ctx.algebra;
      a.hermitian_.assign(alph->size(), true);
      a.star_ = std::move(ctx);
    } else {
      throw AlgebraFileError("unknown relations kind '" + r.kind + "'");
    }
  } catch (const AlgebraFileError&) {
    throw;
  } catch (const InvalidPresentation&) {
    throw;
  } catch (const Error& e) {
    throw InvalidPresentation(e.what());
  }
  // Rebind to the presentation's alphabet so every element shares one pointer.
  a.alphabet_ = a.presentation_->alphabet();
  for (auto& [name, d] : a.definitions_) d = relabel(d, a.alphabet_);
  for (auto& adj : a.adjoints_)
    if (adj) adj = relabel(*adj, a.alphabet_);
  for (auto& [name, m] : a.endomorphisms_) m = m.restricted_to(a.alphabet_, a.alphabet_);
  if (a.star_) a.star_->twist = a.endomorphisms_.at(r.twist);

  for (const auto& [name, m] : a.endomorphisms_) {
    Report check = validate_endomorphism(m, *a.presentation_);
    if (const CheckItem* bad = check.first_failure())
      throw InvalidPresentation("endomorphism '" + name + "' does not respect " + bad->label +
                                (bad->detail.empty() ? "" : " (" + bad->detail + ")"));
  }
  return a;
}

// --- Built-ins -----------------------------------------------------------------------

namespace {

AlgebraFile lie_file(const LiePresentation& p) {
  AlgebraFile f;
  f.name = p.name();
  f.ground_ring = std::string(ring_name(p.alphabet()->ring()));
  if (p.metric()) f.metric = metric_to_string(*p.metric());
  for (const auto& n : p.alphabet()->names()) f.generators.push_back({n, true, {}});
  f.relations.kind = "lie";
  for (const auto& b : p.nonzero_brackets())
    f.relations.brackets.push_back({p.alphabet()->name(b.left), p.alphabet()->name(b.right), to_string(b.value)});
  return f;
}

// J, K, N, M as macros over the L generators.
std::vector<NamedText> lorentz_definitions(const AlphabetPtr& alph) {
  std::vector<NamedText> out;
  for (int k = 1; k <= 3; ++k) out.push_back({"J" + std::to_string(k), to_string(lorentz_J(alph, k))});
  for (int k = 1; k <= 3; ++k) out.push_back({"K" + std::to_string(k), to_string(lorentz_K(alph, k))});
  AlphabetPtr nm = make_alphabet(Ring::Gaussian, {"N1", "N2", "N3", "M1", "M2", "M3"});
  RingMap down = nm_to_lorentz(nm, alph);
  for (Letter g = 0; g < nm->size(); ++g) out.push_back({nm->name(g), to_string(down.image(g))});
  return out;
}

EndomorphismSpec negate(std::string name, const std::vector<std::string>& gens, bool antilinear) {
  EndomorphismSpec e{std::move(name), {}, antilinear};
  for (const auto& g : gens) e.images.push_back({g, "-" + g});
  return e;
}

AlgebraFile ccr_file(const StarAlgebraContext& ctx) {
  AlgebraFile f;
  f.name = ctx.algebra.name();
  f.ground_ring = "Qi";
  if (ctx.metric) f.metric = metric_to_string(*ctx.metric);
  for (const auto& n : ctx.algebra.alphabet()->names()) f.generators.push_back({n, true, {}});
  std::vector<std::string> flipped;
  for (const auto& pr : ctx.pairs) flipped.push_back(pr.l);
  for (const auto& pr : ctx.pairs) flipped.push_back(pr.p);
  f.endomorphisms.push_back(negate("par", flipped, false));
  f.relations.kind = "skew_ccr";
  for (const auto& pr : ctx.pairs) f.relations.pairs.push_back({pr.p, pr.l, pr.eta});
  f.relations.twist = ctx.twist.name();
  return f;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"weyl1", "so13", "so13jk", "su2su2", "iso13", "ccr", "skewccr", "ccr4", "skewccr4"};
}

std::optional<AlgebraFile> builtin_algebra_file(std::string_view name, const Metric& eta) {
  if (name == "weyl1") {
    AlgebraFile f;
    f.name = "weyl1";
    f.generators = {{"t", false, {}}, {"x", false, {}}};
    f.relations.kind = "ore";
    f.relations.extensions.push_back({"x", {}, {{"t", "1"}}});
    return f;
  }
  if (name == "so13" || name == "iso13") {
    LiePresentation p = name == "so13" ? so13(eta) : iso13(eta);
    AlgebraFile f = lie_file(p);
    f.definitions = lorentz_definitions(p.alphabet());
    std::vector<std::string> boosts{"L01", "L02", "L03"}, all = p.alphabet()->names();
    if (name == "iso13") boosts.insert(boosts.end(), {"P1", "P2", "P3"});
    f.endomorphisms = {negate("par", boosts, false), negate("conj", all, true)};
    return f;
  }
  if (name == "so13jk") {
    AlgebraFile f = lie_file(so13jk(eta));
    f.endomorphisms = {negate("par", {"K1", "K2", "K3"}, false),
                       negate("conj", {"J1", "J2", "J3", "K1", "K2", "K3"}, true)};
    return f;
  }
  if (name == "su2su2") {
    AlgebraFile f = lie_file(su2su2(eta));
    EndomorphismSpec par{"par", {}, false}, conj{"conj", {}, true};
    for (int k = 1; k <= 3; ++k) {
      const std::string n = "N" + std::to_string(k), m = "M" + std::to_string(k);
      f.generators[static_cast<std::size_t>(k - 1)] = {n, false, m};
      f.generators[static_cast<std::size_t>(k + 2)] = {m, false, n};
      f.definitions.push_back({"J" + std::to_string(k), n + " + " + m});
    }
    for (int k = 1; k <= 3; ++k) {
      const std::string n = "N" + std::to_string(k), m = "M" + std::to_string(k);
      f.definitions.push_back({"K" + std::to_string(k), "-i*" + n + " + i*" + m});
    }
    for (int k = 1; k <= 3; ++k) {
      const std::string n = "N" + std::to_string(k), m = "M" + std::to_string(k);
      par.images.push_back({n, m});
      conj.images.push_back({n, "-" + m});
    }
    for (int k = 1; k <= 3; ++k) {
      const std::string n = "N" + std::to_string(k), m = "M" + std::to_string(k);
      par.images.push_back({m, n});
      conj.images.push_back({m, "-" + n});
    }
    f.endomorphisms = {par, conj};
    return f;
  }
  if (name == "ccr") return ccr_file(ccr_context());
  if (name == "skewccr") return ccr_file(skewccr_context());
  if (name == "ccr4") return ccr_file(ccr4_context(eta));
  if (name == "skewccr4") return ccr_file(skewccr4_context(eta));
  return std::nullopt;
}

std::string algebra_store_dir() {
  namespace fs = std::filesystem;
  if (const char* home = std::getenv("ORECALC_HOME"); home && *home) return (fs::path(home) / "algebras").string();
  const char* user = std::getenv("HOME");
  return (fs::path(user && *user ? user : ".") / ".orecalc" / "algebras").string();
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraFileError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

AlgebraFile resolve_algebra_file(std::string_view name_or_path, const Metric& eta) {
  namespace fs = std::filesystem;
  if (auto f = builtin_algebra_file(name_or_path, eta)) return *f;
  const std::string s(name_or_path);
  if (s.find('/') != std::string::npos || (s.size() > 5 && s.ends_with(".json")))
    return parse_algebra_file(read_file(s));
  fs::path stored = fs::path(algebra_store_dir()) / (s + ".json");
  if (fs::exists(stored)) return parse_algebra_file(read_file(stored));
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw AlgebraFileError("unknown algebra '" + s + "' (built-ins: " + known + "; or define one first)");
}

std::string store_algebra(const AlgebraFile& f) {
  namespace fs = std::filesystem;
  Algebra::load(f);
  for (const auto& n : builtin_names())
    if (n == f.name) throw AlgebraFileError("'" + f.name + "' is a built-in name");
  for (char c : f.name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      throw AlgebraFileError("algebra names may only use letters, digits, '_' and '-'");
  fs::path dir(algebra_store_dir());
  fs::create_directories(dir);
  fs::path target = dir / (f.name + ".json");
  std::ofstream out(target, std::ios::binary);
  out << print_algebra_file(f);
  if (!out) throw AlgebraFileError("cannot write '" + target.string() + "'");
  return target.string();
}

}  // namespace orecalc
