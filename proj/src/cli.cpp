#include "orecalc/cli.hpp"

#include "orecalc/oracle.hpp"
#include "orecalc/ore.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace orecalc {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraFileError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

CheckOutcome check_equal(const Algebra& algebra, const std::string& lhs_text, const std::string& rhs_text) {
  const std::string lhs = trim(lhs_text), rhs = trim(rhs_text);
  Element a = algebra.evaluate(lhs);
  Element b = algebra.evaluate(rhs);
  CheckOutcome outcome;
  outcome.passed = a == b;
  if (outcome.passed) {
    outcome.text = "PASS " + lhs + " = " + rhs + "\n";
  } else {
    outcome.text = "FAIL " + lhs + " = " + rhs + "\n  lhs -> " + to_string(a) + "\n  rhs -> " + to_string(b) + "\n";
  }
  return outcome;
}

std::vector<GoldenCase> parse_golden_cases(std::string_view text) {
  std::vector<GoldenCase> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
      fields.push_back(line.substr(start, tab - start));
    fields.push_back(line.substr(start));
    if (fields.size() != 3)
      throw AlgebraFileError("cases line " + std::to_string(number) + ": expected expression<TAB>expected<TAB>tag");
    out.push_back({trim(fields[0]), trim(fields[1]), trim(fields[2]), number});
  }
  return out;
}

Report golden_case_report(const Algebra& algebra, const std::vector<GoldenCase>& cases) {
  Report report;
  report.title = "golden cases";
  std::optional<Representation> rep;
  if (algebra.lie()) rep = shipped_rep(*algebra.lie());
  for (const auto& c : cases) {
    const std::string label = "line " + std::to_string(c.line) + " [" + c.tag + "] " + c.expression;
    Element got = algebra.evaluate(c.expression);
    std::string detail;
    bool ok = to_string(got) == c.expected;
    if (!ok) detail = "got " + to_string(got) + ", expected " + c.expected;
    if (ok && rep) {
      Element input = algebra.elaborate(*parse_expression(c.expression));
      ok = evaluate(*rep, input) == evaluate(*rep, got);
      if (!ok) detail = "matrices differ between input and normal form";
    }
    report.add(label, ok, ok ? c.expected : detail);
  }
  return report;
}

namespace {

struct Session {
  std::optional<Metric> signature;

  Metric metric() const { return signature.value_or(kMostlyMinus); }
  Algebra load(const std::string& name) const { return Algebra::load(resolve_algebra_file(name, metric())); }
};

int print_report(const Report& report, std::ostream& out) {
  out << report.to_text();
  return report.passed() ? kExitOk : kExitCheckFailed;
}

std::optional<TowerLevel> parse_level_spec(const std::string& spec, std::size_t height, Ring ring,
                                           std::size_t& level_out) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw AlgebraFileError("level spec '" + spec + "' must start with '<level>:'");
  std::size_t level = 0;
  try {
    level = std::stoul(spec.substr(0, colon));
  } catch (const std::exception&) {
    throw AlgebraFileError("level spec '" + spec + "': bad level number");
  }
  if (level < 1 || level > height) throw AlgebraFileError("level spec '" + spec + "': level out of range");
  level_out = level;

  // Elaborate images over the level's base A_{n-1}[t_n] through a throwaway free algebra.
  AlphabetPtr base = weyl_tower_base_alphabet(level, ring);
  AlgebraFile scratch;
  scratch.name = "tower-level-" + std::to_string(level);
  scratch.ground_ring = std::string(ring_name(ring));
  for (const auto& n : base->names()) scratch.generators.push_back({n, false, {}});
  Algebra scope = Algebra::load(scratch);

  TowerLevel out;
  std::string rest = spec.substr(colon + 1);
  std::istringstream parts(rest);
  std::string part;
  while (std::getline(parts, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    const auto open = part.find('('), close = part.find(')'), eq = part.find('=');
    if (open == std::string::npos || close == std::string::npos || eq == std::string::npos || close > eq ||
        open > close)
      throw AlgebraFileError("level spec entry '" + part + "' must look like alpha(g)=expr or delta(g)=expr");
    const std::string kind = trim(part.substr(0, open));
    const std::string gen = trim(part.substr(open + 1, close - open - 1));
    Element value = scope.elaborate(*parse_expression(part.substr(eq + 1)));
    if (!base->find(gen)) throw AlgebraFileError("level spec: '" + gen + "' is not a generator of level " +
                                                 std::to_string(level) + "'s base");
    if (kind == "alpha")
      out.twist.emplace_back(gen, value);
    else if (kind == "delta")
      out.derivation.emplace_back(gen, value);
    else
      throw AlgebraFileError("level spec entry '" + part + "': expected alpha or delta");
  }
  return out;
}

std::string relation_lines(const Presentation& p) {
  std::string out;
  const AlphabetPtr& alph = p.alphabet();
  for (const auto& rel : p.relations())
    out += "  " + word_to_string(*alph, {rel.hi, rel.lo}) + " = " + to_string(*p.rule(rel.hi, rel.lo)) + "\n";
  return out;
}

int repl(Session& session, std::optional<std::string> initial, std::istream& in, std::ostream& out,
         std::ostream& err) {
  std::optional<Algebra> active;
  if (initial) active = session.load(*initial);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line == ":quit" || line == ":q") return kExitOk;
      if (line.rfind(":algebra", 0) == 0 || line.rfind(":load", 0) == 0) {
        const bool is_load = line.rfind(":load", 0) == 0;
        std::string arg = trim(line.substr(is_load ? 5 : 8));
        if (arg.empty()) throw AlgebraFileError(std::string(is_load ? ":load" : ":algebra") + " needs an argument");
        active = is_load ? Algebra::load(parse_algebra_file(read_text(arg))) : session.load(arg);
        out << "algebra " << active->name() << "\n";
        continue;
      }
      if (!active) throw AlgebraFileError("no active algebra; use :algebra <name> or :load <file>");
      if (line.rfind(":check", 0) == 0) {
        std::string body = line.substr(6);
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw AlgebraFileError(":check needs <lhs> = <rhs>");
        out << check_equal(*active, trim(body.substr(0, eq)), trim(body.substr(eq + 1))).text;
        continue;
      }
      if (line.front() == ':') throw AlgebraFileError("unknown command " + line);
      out << to_string(active->evaluate(line)) << "\n";
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normal forms in Ore extensions and enveloping algebras", "orecalc"};
  app.require_subcommand(1);
  std::string signature;
  app.add_option("--signature", signature, "metric for the built-in Lorentz algebras: +--- or -+++");

  std::string algebra_name;
  auto add_algebra = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("-a,--algebra", algebra_name, "built-in name, defined name or .json path");
    if (required) opt->required();
  };

  auto* define = app.add_subcommand("define", "validate an algebra file and store it by name");
  std::string define_file;
  define->add_option("file", define_file)->required();

  auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
  add_algebra(normalize);
  std::string expr;
  normalize->add_option("expr", expr)->required();

  auto* check = app.add_subcommand("check", "compare two expressions after normalization");
  add_algebra(check);
  std::string lhs, rhs;
  check->add_option("lhs", lhs)->required();
  check->add_option("rhs", rhs)->required();

  auto* grade = app.add_subcommand("grade", "dimension of the degree-n PBW slice");
  add_algebra(grade);
  std::size_t degree = 0;
  bool basis = false;
  grade->add_option("-n,--degree", degree)->required();
  grade->add_flag("--basis", basis, "list the sorted basis words");

  auto* tower = app.add_subcommand("tower", "iterated Weyl tower A_n = A_1(A_{n-1})");
  std::size_t height = 1;
  std::vector<std::string> level_specs;
  std::string tower_expr, tower_ring = "Q";
  tower->add_option("--height", height)->required()->check(CLI::Range(1, 16));
  tower->add_option("--level-spec", level_specs, "e.g. 2:alpha(x1)=-x1;delta(t2)=1");
  tower->add_option("--normalize", tower_expr, "expression to normalize in the top level");
  tower->add_option("--ring", tower_ring, "ground ring: Q or Qi");

  auto* skew = app.add_subcommand("check-skew-ccr", "skewed canonical commutation checks");
  add_algebra(skew);

  auto* oracle = app.add_subcommand("oracle", "verify normal forms against a matrix representation");
  add_algebra(oracle);
  std::string cases_file;
  oracle->add_option("--cases", cases_file, "golden cases: expression<TAB>expected<TAB>tag");

  auto* repl_cmd = app.add_subcommand("repl", "read expressions from standard input");
  add_algebra(repl_cmd, false);

  auto* exp = app.add_subcommand("export", "print an algebra file");
  add_algebra(exp);

  auto* list = app.add_subcommand("list", "list built-in algebras");

  // Expressions such as "-i*L13" or "-hbar" would be taken for options; a
  // leading space keeps them positional and the expression lexer skips it.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    const std::string& a = *it;
    const bool option = a == "-a" || a == "-n" || a == "-h" || a.rfind("--", 0) == 0;
    reversed.push_back(a.size() > 1 && a[0] == '-' && !option ? " " + a : a);
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Session session;
  try {
    if (!signature.empty()) {
      try {
        session.signature = parse_metric(trim(signature));
      } catch (const Error& e) {
        throw AlgebraFileError(std::string("--signature: ") + e.what());
      }
    }

    if (*define) {
      AlgebraFile f = parse_algebra_file(read_text(define_file));
      const std::string path = store_algebra(f);
      out << "defined " << f.name << " (" << f.generators.size() << " generators) in " << path << "\n";
      return kExitOk;
    }
    if (*list) {
      for (const auto& n : builtin_names()) out << n << "\n";
      return kExitOk;
    }
    if (*tower) {
      Ring ring;
      try {
        ring = parse_ring(tower_ring);
      } catch (const Error& e) {
        throw AlgebraFileError(std::string("--ring: ") + e.what());
      }
      std::vector<std::optional<TowerLevel>> levels(height);
      for (const auto& spec : level_specs) {
        std::size_t level = 0;
        auto parsed = parse_level_spec(spec, height, ring, level);
        if (levels[level - 1]) throw AlgebraFileError("level " + std::to_string(level) + " specified twice");
        levels[level - 1] = std::move(parsed);
      }
      WeylTower t = build_weyl_tower(height, levels, ring);
      const Presentation& p = t.presentation();
      out << "tower height " << height << " over " << ring_name(ring) << "\n";
      std::string gens;
      for (const auto& n : p.alphabet()->names()) gens += (gens.empty() ? "" : " < ") + n;
      out << "generators: " << gens << "\nrelations:\n" << relation_lines(p);
      Report overlaps = check_overlaps(p);
      out << "overlaps: " << (overlaps.passed() ? "confluent" : "NOT confluent") << " ("
          << overlaps.items.back().detail << " resolved)\n";
      for (const auto& item : overlaps.items)
        if (!item.passed) out << "  " << item.label << ": " << item.detail << "\n";
      if (!tower_expr.empty()) {
        AlgebraFile scratch;
        scratch.name = "tower";
        scratch.ground_ring = std::string(ring_name(ring));
        for (const auto& n : p.alphabet()->names()) scratch.generators.push_back({n, false, {}});
        Algebra scope = Algebra::load(scratch);
        Element e = relabel(scope.elaborate(*parse_expression(tower_expr)), p.alphabet());
        out << "normal form: " << to_string(t.normalize(e)) << "\n";
      }
      return overlaps.passed() ? kExitOk : kExitCheckFailed;
    }
    if (*repl_cmd) {
      std::optional<std::string> initial;
      if (!algebra_name.empty()) initial = algebra_name;
      return repl(session, initial, in, out, err);
    }

    if (*exp) {
      out << print_algebra_file(resolve_algebra_file(algebra_name, session.metric()));
      return kExitOk;
    }

    Algebra algebra = session.load(algebra_name);
    if (*normalize) {
      out << to_string(algebra.evaluate(expr)) << "\n";
      return kExitOk;
    }
    if (*check) {
      CheckOutcome outcome = check_equal(algebra, lhs, rhs);
      out << outcome.text;
      return outcome.passed ? kExitOk : kExitCheckFailed;
    }
    if (*grade) {
      if (!algebra.presentation().pbw_type())
        throw Error("'" + algebra.name() + "' is not of PBW type; sorted words are not a basis");
      const std::size_t m = algebra.alphabet()->size();
      out << graded_dimension(m, degree) << "\n";
      if (basis) {
        // Nondecreasing words of length `degree`, in lexicographic order.
        Word w(degree, 0);
        while (true) {
          out << word_to_string(*algebra.alphabet(), w) << "\n";
          std::size_t k = degree;
          while (k > 0 && w[k - 1] + 1u >= m) --k;
          if (k == 0) break;
          const Letter next = static_cast<Letter>(w[k - 1] + 1);
          for (std::size_t j = k - 1; j < degree; ++j) w[j] = next;
        }
      }
      return kExitOk;
    }
    if (*skew) {
      if (!algebra.star())
        throw AlgebraFileError("'" + algebra.name() + "' has no skew_ccr relations");
      return print_report(skew_ccr_report(*algebra.star()), out);
    }
    if (*oracle) {
      if (!algebra.lie()) throw Error("'" + algebra.name() + "' is not a Lie presentation; no oracle available");
      auto rep = shipped_rep(*algebra.lie());
      if (!rep) throw Error("no matrix representation shipped for '" + algebra.name() + "'");
      Report report = oracle_report(*algebra.lie(), *rep);
      if (!cases_file.empty()) report.append(golden_case_report(algebra, parse_golden_cases(read_text(cases_file))));
      return print_report(report, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidPresentation& e) {
    err << "error: invalid algebra: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidOreSpec& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  }
  return kExitUsage;
}

}  // namespace orecalc
