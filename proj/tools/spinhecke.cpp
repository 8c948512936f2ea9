// spinhecke: normal forms, verification suites and module actions from the
// command line. Exit status: 0 all checks pass, 1 a check failed, 2 bad
// flags or input.

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include <json.hpp>

#include "spinhecke/clifford_family.hpp"
#include "spinhecke/dunkl.hpp"
#include "spinhecke/morphisms.hpp"
#include "spinhecke/parser.hpp"
#include "spinhecke/spin_family.hpp"

using namespace spinhecke;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string algebra = "dahca";
  int n = 2;
  std::string u;
  bool tensor = false;
  bool localized = false;
  std::string expr;
  std::string format = "text";
  int degree_bound = 3;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string name;
  std::string op;
  int i = 1;
  std::string module;
  std::string side = "y";
  std::string fiber = "1";
  std::string element;
  std::string alpha;
  bool example = false;
};

// Input the user can fix: reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string command;
  std::string algebra;
  int n = 0;
  Report report;
  json value;              // optional payload
  std::string text_value;  // printed instead of the result list in text mode
};

const Algebra& algebra_from(const Options& o) {
  AlgebraSpec s;
  s.kind = parse_kind(o.algebra);
  s.n = o.n;
  s.tensor = o.tensor;
  s.localized = o.localized;
  if (!o.u.empty()) {
    Scalar v = parse_scalar(o.u);
    if (!v.is_constant()) throw UsageError("--u must be a number in Q(w)");
    s.u_value = v.eval(QOmega(0));
  }
  return Algebra::get(s);
}

int emit(const Output& out, const std::string& format) {
  if (format == "json") {
    json j;
    j["schema"] = "spinhecke-report/1";
    j["command"] = out.command;
    j["algebra"] = out.algebra;
    j["n"] = out.n;
    if (!out.value.is_null()) j["value"] = out.value;
    json results = json::array();
    for (const CheckResult& r : out.report.results) {
      json e;
      e["id"] = r.id;
      e["status"] = r.pass ? "pass" : "fail";
      e["witness"] = r.witness;
      results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    j["summary"] = {{"pass", out.report.passed()}, {"fail", out.report.failed()}};
    std::cout << j.dump(2) << "\n";
  } else {
    if (!out.text_value.empty()) std::cout << out.text_value << "\n";
    for (const CheckResult& r : out.report.results) {
      if (r.pass) std::cout << "PASS " << r.id << "\n";
      else std::cout << "FAIL " << r.id << (r.witness.empty() ? "" : ": " + r.witness) << "\n";
    }
    if (!out.report.results.empty())
      std::cout << "summary: " << out.report.passed() << " pass, " << out.report.failed() << " fail\n";
  }
  return out.report.ok() ? 0 : 1;
}

Output run_normalize(const Options& o) {
  if (o.expr.empty()) throw UsageError("normalize needs --expr");
  const Algebra& a = algebra_from(o);
  Element e = parse_element(o.expr, a);
  Output out{"normalize", a.name(), a.n(), {}, e.to_json(), e.to_string()};
  return out;
}

Output run_verify_relations(const Options& o) {
  const Algebra& a = algebra_from(o);
  Output out{"verify-relations", a.name(), a.n(), verify_relations(a), {}, {}};
  ConfluenceOptions opt{o.trials, o.degree_bound, o.seed, 2};
  out.report.append(confluence_probe(a, opt), "confluence: ");
  return out;
}

Output run_verify_morphisms(const Options& o) {
  Output out{"verify-morphisms", o.name.empty() ? "all" : o.name, o.n, {}, {}, {}};
  if (!o.name.empty()) {
    MorphismName m = parse_morphism(o.name);
    out.algebra = morphism_name(m);
    out.report = verify_morphism(m, o.n);
    return out;
  }
  for (MorphismName m : all_morphisms()) out.report.append(verify_morphism(m, o.n), morphism_name(m) + ": ");
  out.report.append(check_distinguished_images(o.n), "images: ");
  out.report.append(check_compatibility_square(o.n), "square: ");
  return out;
}

Output run_verify_modules(const Options& o) {
  const Algebra& a = algebra_from(o);
  std::string mod = o.module;
  if (mod.empty()) mod = a.kind() == Kind::SDaHa ? "regular-spin" : "basic-spin";
  if (o.side != "y" && o.side != "x") throw UsageError("--side must be y or x");
  PolySide side = o.side == "y" ? PolySide::Y : PolySide::X;
  InducedModule m(a, FiniteModule::by_name(mod, o.n), side);
  Output out{"verify-modules", a.name(), a.n(), verify_module(m, o.degree_bound), {}, {}};
  if (a.kind() == Kind::DaHCa && mod == "basic-spin" && side == PolySide::Y && !a.spec().u_value)
    out.report.append(transport_check(o.n, o.degree_bound), "");
  return out;
}

Output run_center_check(const Options& o) {
  const Algebra& a = algebra_from(o);
  Element e(a);
  if (!o.expr.empty()) {
    e = parse_element(o.expr, a);
  } else if (o.example) {
    if (a.kind() == Kind::DaHCa) e = dahca_center_example(a);
    else if (a.kind() == Kind::SDaHa) e = sdaha_center_example(a);
    else throw UsageError("--example exists for dahca and sdaha");
  } else {
    throw UsageError("center-check needs --expr or --example");
  }
  return {"center-check", a.name(), a.n(), center_check(e), e.to_json(), e.to_string()};
}

Output run_embedding_check(const Options& o) {
  Kind k = parse_kind(o.algebra);
  if (k != Kind::DaHCa && k != Kind::SDaHa) throw UsageError("embedding-check needs --algebra dahca or sdaha");
  std::vector<Scalar> alphas;
  if (o.alpha.empty()) alphas = {Scalar(0), Scalar(1), Scalar::u()};
  else alphas = {parse_scalar(o.alpha)};
  Output out{"embedding-check", kind_name(k), o.n, {}, {}, {}};
  for (const Scalar& al : alphas)
    out.report.append(k == Kind::DaHCa ? affine_embedding_check(o.n, al) : spin_affine_embedding_check(o.n, al));
  out.report.append(k == Kind::DaHCa ? commuting_family_check(o.n, alphas) : spin_commuting_family_check(o.n, alphas),
                    "family: ");
  return out;
}

Output run_cocycle_table(const Options& o) {
  if (o.n < 1 || o.n > kMaxRank) throw UsageError("--n must be between 1 and " + std::to_string(kMaxRank));
  const SymmetricGroup& g = SymmetricGroup::get(o.n);
  Output out{"cocycle-table", "SpinSym", o.n, {}, {}, {}};
  json labels = json::array(), table = json::array();
  std::string text = "beta(row, column), elements as one-line permutations";
  for (int a = 0; a < g.order(); ++a) labels.push_back(g.element(a).to_string());
  // The full table only while it stays readable.
  bool print_table = g.order() <= 24;
  for (int a = 0; a < g.order() && print_table; ++a) {
    json row = json::array();
    std::string line = g.element(a).to_string() + " ";
    for (int b = 0; b < g.order(); ++b) {
      int v = g.spin_cocycle(a, b);
      row.push_back(v);
      line += v > 0 ? " +" : " -";
    }
    table.push_back(std::move(row));
    text += "\n" + line;
  }
  out.value = {{"elements", labels}};
  if (print_table) out.value["table"] = table;
  out.text_value = print_table ? text : "table omitted for n > 4";

  auto identity = [&](int a, int b, int c) {
    return g.spin_cocycle(a, b) * g.spin_cocycle(g.compose(a, b), c) ==
           g.spin_cocycle(a, g.compose(b, c)) * g.spin_cocycle(b, c);
  };
  std::string witness;
  if (g.order() <= 24) {
    for (int a = 0; a < g.order() && witness.empty(); ++a)
      for (int b = 0; b < g.order() && witness.empty(); ++b)
        for (int c = 0; c < g.order() && witness.empty(); ++c)
          if (!identity(a, b, c)) witness = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    out.report.add("cocycle identity on all triples", witness.empty(), witness);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> d(0, g.order() - 1);
    for (int t = 0; t < 1000 && witness.empty(); ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (!identity(a, b, c)) witness = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    }
    out.report.add("cocycle identity on 1000 random triples", witness.empty(), witness);
  }
  bool unit = true;
  for (int a = 0; a < g.order(); ++a) unit &= g.spin_cocycle(0, a) == 1 && g.spin_cocycle(a, 0) == 1;
  out.report.add("beta(1, s) = beta(s, 1) = 1", unit);
  return out;
}

// f (x) w from --expr and --fiber.
InducedVector induced_input(const InducedModule& m, const Options& o) {
  int b = -1;
  for (int k = 0; k < m.fiber().dim(); ++k)
    if (m.fiber().label(k) == o.fiber) b = k;
  if (b < 0) throw UsageError("no basis vector '" + o.fiber + "' in " + m.fiber().name());
  Element f = parse_element(o.expr.empty() ? "1" : o.expr, m.algebra());
  InducedVector v;
  for (const auto& [mono, c] : f.terms()) {
    Monomial probe;
    (m.side() == PolySide::Y ? probe.right : probe.left) = (m.side() == PolySide::Y ? mono.right : mono.left);
    if (!(probe == mono)) throw UsageError("--expr must be a polynomial in the " + m.variable() + " variables");
    v.add_term(m.side() == PolySide::Y ? mono.right : mono.left, b, c);
  }
  return v;
}

Output run_act(const Options& o) {
  std::string op = o.op.empty() ? "dunkl-x" : o.op;
  Options q = o;
  if (op == "dunkl-xi") q.algebra = "sdaha";
  else if (op == "dunkl-x" || op == "dunkl-y") q.algebra = "dahca";
  else if (op != "element") throw UsageError("--op must be dunkl-x, dunkl-y, dunkl-xi or element");
  if (op == "dunkl-y") q.side = "x";
  if (op == "dunkl-x" || op == "dunkl-xi") q.side = "y";
  if (q.side != "y" && q.side != "x") throw UsageError("--side must be y or x");
  const Algebra& a = algebra_from(q);
  std::string mod = q.module.empty() ? (a.kind() == Kind::SDaHa ? "regular-spin" : "basic-spin") : q.module;
  InducedModule m(a, FiniteModule::by_name(mod, q.n), q.side == "y" ? PolySide::Y : PolySide::X);
  InducedVector v = induced_input(m, q);
  InducedVector r;
  if (op == "dunkl-x") r = dunkl_x(m, q.i, v);
  else if (op == "dunkl-y") r = dunkl_y(m, q.i, v);
  else if (op == "dunkl-xi") r = dunkl_xi(m, q.i, v);
  else {
    if (q.element.empty()) throw UsageError("--op element needs --element");
    r = m.act(parse_element(q.element, a), v);
  }
  return {"act", a.name(), a.n(), {}, m.to_json(r), m.to_string(r)};
}

Output run_map(const Options& o) {
  if (o.name.empty()) throw UsageError("map needs --name");
  if (o.expr.empty()) throw UsageError("map needs --expr");
  Morphism f = make_morphism(parse_morphism(o.name), o.n, o.tensor);
  Element x = parse_element(o.expr, f.source());
  Element y = f.apply(x);
  return {"map", f.source().name() + " -> " + f.target().name(), o.n, {}, y.to_json(), y.to_string()};
}

void common(CLI::App* sc, Options& o) {
  sc->add_option("--algebra", o.algebra, "sym, cliffordsym, spinsym, affinehc, spinaffine, dahca, sdaha, trigdahca, trigsdaha");
  sc->add_option("--n", o.n, "rank")->check(CLI::Range(1, kMaxRank));
  sc->add_option("--u", o.u, "specialize u to a number in Q(w)");
  sc->add_flag("--tensor", o.tensor, "extra Clifford factor C_n (x) -");
  sc->add_flag("--localized", o.localized, "adjoin y_i^-1");
  sc->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  sc->add_option("--seed", o.seed);
  sc->add_option("--degree-bound", o.degree_bound)->check(CLI::Range(0, 12));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms and verification suites for spin double affine Hecke algebras"};
  app.require_subcommand(1);
  Options o;

  auto* normalize = app.add_subcommand("normalize", "print the normal form of --expr");
  common(normalize, o);
  normalize->add_option("--expr", o.expr);

  auto* relations = app.add_subcommand("verify-relations", "defining relations and confluence probes");
  common(relations, o);
  relations->add_option("--trials", o.trials)->check(CLI::Range(0, 100000));

  auto* morphisms = app.add_subcommand("verify-morphisms", "homomorphism and inverse checks");
  common(morphisms, o);
  morphisms->add_option("--name", o.name, "one map (Phi, Psi, PhiHat, ...); all when omitted");

  auto* modules = app.add_subcommand("verify-modules", "Dunkl module relations and oracle agreement");
  common(modules, o);
  modules->add_option("--module", o.module, "basic-spin, regular-clifford, regular-spin");
  modules->add_option("--side", o.side, "y: C[y] (x) W, x: C[x] (x) W");

  auto* center = app.add_subcommand("center-check", "is --expr even and central");
  common(center, o);
  center->add_option("--expr", o.expr);
  center->add_flag("--example", o.example, "the n = 2 example element");

  auto* embedding = app.add_subcommand("embedding-check", "affine algebra inside the double affine one");
  common(embedding, o);
  embedding->add_option("--alpha", o.alpha, "scalar; 0, 1 and u when omitted");

  auto* cocycle = app.add_subcommand("cocycle-table", "the spin cocycle beta");
  common(cocycle, o);

  auto* act = app.add_subcommand("act", "act on an induced module");
  common(act, o);
  act->add_option("--op", o.op, "dunkl-x, dunkl-y, dunkl-xi, element");
  act->add_option("--i", o.i);
  act->add_option("--module", o.module);
  act->add_option("--side", o.side);
  act->add_option("--expr", o.expr, "polynomial in the free variables");
  act->add_option("--fiber", o.fiber, "basis vector label of W");
  act->add_option("--element", o.element, "algebra element for --op element");

  auto* map = app.add_subcommand("map", "apply a morphism");
  common(map, o);
  map->add_option("--name", o.name);
  map->add_option("--expr", o.expr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Output out;
    if (normalize->parsed()) out = run_normalize(o);
    else if (relations->parsed()) out = run_verify_relations(o);
    else if (morphisms->parsed()) out = run_verify_morphisms(o);
    else if (modules->parsed()) out = run_verify_modules(o);
    else if (center->parsed()) out = run_center_check(o);
    else if (embedding->parsed()) out = run_embedding_check(o);
    else if (cocycle->parsed()) out = run_cocycle_table(o);
    else if (act->parsed()) out = run_act(o);
    else out = run_map(o);
    return emit(out, o.format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error in expression: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
