#include "commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "ncball/error.hpp"
#include "ncball/gluing/index.hpp"
#include "ncball/gluing/mirror.hpp"
#include "ncball/graphs/ktheory.hpp"
#include "ncball/graphs/lattice.hpp"
#include "ncball/ncalg/identities.hpp"
#include "ncball/ncalg/parser.hpp"
#include "ncball/ncalg/rewrite.hpp"
#include "ncball/parallel.hpp"
#include "ncball/reps/injectivity.hpp"
#include "ncball/reps/suspension.hpp"
#include "ncball/reps/verify.hpp"

namespace ncball::cli {

namespace {

using ncalg::Family;

Family family_of(const std::string& text) {
  auto f = ncalg::parse_family(text);
  if (!f) throw_invalid("unknown family '" + text + "' (ball-even, ball-odd, boundary-even, boundary-odd)");
  return *f;
}

Json group_json(const graphs::AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_si());
  return Json{{"rank", g.rank}, {"torsion", torsion}};
}

Json number_or_null(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

Json checks_json(const VerificationReport& report) {
  Json arr = Json::array();
  for (const auto& e : report.entries()) {
    Json entry{{"name", e.name}, {"status", e.passed ? "pass" : "fail"}, {"value", number_or_null(e.value)}};
    if (!e.note.empty()) entry["note"] = e.note;
    if (!e.detail.empty()) entry["detail"] = e.detail;
    arr.push_back(std::move(entry));
  }
  return arr;
}

// Appends checks and summary and fixes the exit code.
Outcome finish(Json body, const VerificationReport& report, std::string text) {
  body["checks"] = checks_json(report);
  body["summary"] = Json{{"passed", report.passed_count()}, {"failed", report.failed_count()}};
  text += report.to_text();
  return {std::move(body), std::move(text), report.all_passed() ? 0 : 1};
}

Json header(const Options& o, const Json& params) {
  Json command{{"verb", o.verb}};
  command.update(params);
  Json out{{"schema", schema_version}};
  out["command"] = command;
  return out;
}

Outcome run_verify(const Options& o) {
  const Family family = family_of(o.family);
  const auto pres = ncalg::build_presentation(family, o.n);
  VerificationReport report(fmt::format("{} at q = {}, cutoff {}, margin {}", pres.name(), o.q, o.cutoff, o.margin));
  report.append(ncalg::verify_identities_symbolic(pres), "symbolic: ");

  const auto reps = reps::catalog(family, o.n, o.q, o.cutoff, reps::theta_grid(o.thetas));
  const auto results = parallel_map<VerificationReport>(
      reps.size(), [&](std::size_t i) { return reps::verify_rep(reps[i], pres, o.margin, o.tol); });
  for (std::size_t i = 0; i < reps.size(); ++i) report.append(results[i], reps[i].label() + ": ");

  Json body = header(o, {{"family", o.family}, {"n", o.n}, {"q", o.q}, {"cutoff", o.cutoff}, {"margin", o.margin},
                         {"tol", o.tol}, {"thetas", o.thetas}});
  body["presentation"] = pres.name();
  body["representations"] = reps.size();
  return finish(std::move(body), report, fmt::format("{}: {} representations\n", pres.name(), reps.size()));
}

Outcome run_nf(const Options& o) {
  if (o.expr.empty()) throw_invalid("nf needs --expr");
  const auto pres = ncalg::build_presentation(family_of(o.family), o.n);
  const auto p = ncalg::parse_expression(o.expr, pres);
  const auto nf = ncalg::normal_form(p, pres);
  Json body = header(o, {{"family", o.family}, {"n", o.n}, {"expr", o.expr}});
  body["normal_form"] = nf.to_string();
  body["zero"] = nf.is_zero();
  return {std::move(body), nf.to_string() + "\n", 0};
}

Outcome run_ktheory(const Options& o) {
  graphs::DirectedGraph graph;
  Json command;
  if (!o.edges.empty()) {
    graph = graphs::parse_graph(o.edges);
    command = {{"edges", o.edges}};
  } else {
    auto fam = graphs::parse_graph_family(o.graph);
    if (!fam) throw_invalid("unknown graph '" + o.graph + "' (M, L-odd, L-even)");
    graph = graphs::build_graph(*fam, o.n);
    command = {{"graph", o.graph}, {"n", o.n}};
  }
  const auto kt = graphs::ktheory_graph(graph);
  const auto lattice = graphs::hereditary_saturated_lattice(graph);

  Json body = header(o, command);
  body["K0"] = group_json(kt.k0);
  body["K1"] = group_json(kt.k1);
  Json classes = Json::object();
  for (std::size_t v = 0; v < kt.vertex_classes.size(); ++v) {
    Json coords = Json::array();
    for (const auto& c : kt.vertex_classes[v]) coords.push_back(c.get_si());
    classes[graph.vertex_names()[v]] = coords;
  }
  body["vertex_classes"] = classes;
  Json ideals = Json::array();
  for (const auto& h : lattice) {
    Json set = Json::array();
    for (int v : h) set.push_back(graph.vertex_names()[static_cast<std::size_t>(v)]);
    ideals.push_back(set);
  }
  body["ideal_lattice"] = ideals;

  VerificationReport report("graph K-theory");
  report.add("vertex classes generate K0", kt.classes_generate(), std::numeric_limits<double>::quiet_NaN(), "exact");
  report.add("ideal lattice is a chain", graphs::is_chain(lattice), static_cast<double>(lattice.size()),
             "value = number of hereditary saturated subsets");
  return finish(std::move(body), report,
                fmt::format("K0 = {}\nK1 = {}\n", kt.k0.to_string(), kt.k1.to_string()));
}

gluing::BetaSpec beta_of(const Options& o) {
  bool mirror = false;
  if (o.beta == "mirror" || o.beta == "2")
    mirror = true;
  else if (o.beta != "identity" && o.beta != "1")
    throw_invalid("unknown beta '" + o.beta + "' (identity, mirror, 1, 2)");
  std::vector<fock::Complex> phases;
  if (!o.phases_deg.empty()) {
    if (static_cast<int>(o.phases_deg.size()) != o.n)
      throw_invalid(fmt::format("--phases needs {} angles, got {}", o.n, o.phases_deg.size()));
    for (double deg : o.phases_deg) phases.push_back(std::polar(1.0, deg * std::numbers::pi / 180.0));
  }
  return gluing::BetaSpec::even(o.n, mirror, std::move(phases));
}

Outcome run_index(const Options& o) {
  const auto beta = beta_of(o);
  const auto idx = gluing::index_class(o.n, beta, o.max_len);
  const auto kt = gluing::ktheory_double(idx);

  VerificationReport report("index map");
  bool stable = true;
  for (int len = 3; len < o.max_len; ++len)
    if (!(gluing::index_class(o.n, beta, len) == idx)) stable = false;
  report.add(fmt::format("index unchanged for max_len 3..{}", o.max_len), stable,
             std::numeric_limits<double>::quiet_NaN(), "exact");

  Json phases = Json::array();
  for (double d : o.phases_deg) phases.push_back(d);
  Json body = header(o, {{"beta", o.beta}, {"n", o.n}, {"max_len", o.max_len}, {"phases_deg", phases}});
  body["beta"] = Json{{"type", beta.type()}, {"phases_deg", phases}};
  body["index"] = Json::array({idx.d1, idx.d2});
  body["K0"] = group_json(kt.k0);
  body["K1"] = group_json(kt.k1);
  body["generator_relation"] = kt.relation;
  return finish(std::move(body), report,
                fmt::format("index = ({}, {})\nK0 = {}, K1 = {}, {}\n", idx.d1, idx.d2, kt.k0.to_string(),
                            kt.k1.to_string(), kt.relation));
}

Outcome run_mirror(const Options& o) {
  const auto d = gluing::distinguish_mirror(o.n, o.max_len);
  VerificationReport report;
  report.append(gluing::mirror_rep_consistency(o.n, o.q, o.cutoff, reps::theta_grid(o.thetas), 1e-12));

  auto side = [](const gluing::IndexClass& idx, const gluing::DoubleKTheory& kt) {
    return Json{{"index", Json::array({idx.d1, idx.d2})},
                {"K0", group_json(kt.k0)},
                {"K1", group_json(kt.k1)},
                {"generator_relation", kt.relation}};
  };
  Json body = header(o, {{"n", o.n}, {"q", o.q}, {"cutoff", o.cutoff}, {"max_len", o.max_len}, {"thetas", o.thetas}});
  body["identity"] = side(d.identity_index, d.identity);
  body["mirror"] = side(d.mirror_index, d.mirror);
  body["verdict"] = d.verdict;
  body["primitive_ideal_space"] = d.ideal_space_shape;
  return finish(std::move(body), report,
                fmt::format("identity: {}; mirror: {}; {}\n", d.identity.relation, d.mirror.relation, d.verdict));
}

Outcome run_reps(const Options& o) {
  const Family family = family_of(o.family);
  const auto reps = reps::catalog(family, o.n, o.q, o.cutoff, reps::theta_grid(o.thetas));
  const auto shape = reps::catalog_shape(family, o.n);
  const bool has_criterion = family != Family::ball_odd;

  Json list = Json::array();
  std::string text;
  for (const auto& r : reps) {
    Json item{{"label", r.label()}, {"dimension", r.space().dimension()}};
    if (has_criterion) {
      const auto res = reps::injectivity_check(r, reps::criterion_for(family));
      item["injective"] = res.injective;
      item["witness"] = res.witness;
    }
    text += fmt::format("{}  dim {}\n", r.label(), r.space().dimension());
    list.push_back(std::move(item));
  }
  Json body = header(o, {{"family", o.family}, {"n", o.n}, {"q", o.q}, {"cutoff", o.cutoff}, {"thetas", o.thetas}});
  body["circle_families"] = shape.circle_families;
  body["other_families"] = shape.other_families;
  if (has_criterion) body["criterion"] = std::string(reps::to_string(reps::criterion_for(family)));
  body["representations"] = list;
  return finish(std::move(body), VerificationReport("catalog"), text);
}

Outcome run_suspend(const Options& o) {
  using reps::RepSpec;
  const RepSpec base_spec{Family::ball_even, o.n, reps::Kind::sigma, 0, 1.0, 0.0, o.q, o.cutoff};
  const auto base = reps::irrep(base_spec);
  const int levels = o.levels > 0 ? o.levels : o.cutoff;
  const auto suspended = reps::suspend_rep(base, levels);
  VerificationReport report;
  report.append(reps::suspension_identity_report(base, suspended, o.margin, o.tol));
  if (levels == o.cutoff) {
    RepSpec next = base_spec;
    next.n = o.n + 1;
    const auto sigma_next = reps::irrep(next);
    const fock::InteriorProjector all(sigma_next.space(), 0);
    for (int j = 1; j <= o.n + 1; ++j) {
      const double diff = reps::max_entry_difference(suspended.generator(j), sigma_next.generator(j), all);
      report.add(fmt::format("Sigma2(sigma)(z{}) = sigma(z{}) of the next ball", j, j), diff <= 1e-12, diff,
                 "entrywise, whole space");
    }
  }
  Json body = header(o, {{"n", o.n}, {"q", o.q}, {"cutoff", o.cutoff}, {"levels", levels}, {"margin", o.margin},
                         {"tol", o.tol}});
  body["suspended"] = suspended.label();
  body["dimension"] = suspended.space().dimension();
  return finish(std::move(body), report, suspended.label() + "\n");
}

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_parameter:
    case ErrorKind::parse_error:
    case ErrorKind::unknown_generator:
    case ErrorKind::unsupported_graph:
    case ErrorKind::unsupported_presentation:
      return true;
    default:
      return false;
  }
}

}  // namespace

Outcome run(const Options& o) {
  try {
    if (o.verb == "verify") return run_verify(o);
    if (o.verb == "nf") return run_nf(o);
    if (o.verb == "ktheory") return run_ktheory(o);
    if (o.verb == "index") return run_index(o);
    if (o.verb == "mirror") return run_mirror(o);
    if (o.verb == "reps") return run_reps(o);
    if (o.verb == "suspend") return run_suspend(o);
  } catch (const Error& e) {
    if (usage_kind(e.kind())) throw;
    // Numeric breakdowns are reported, not raised.
    VerificationReport report(o.verb);
    report.add("evaluation", false, std::numeric_limits<double>::quiet_NaN(), std::string(to_string(e.kind())),
               e.what());
    return finish(header(o, Json::object()), report, "");
  }
  throw_invalid("unknown verb '" + o.verb + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Noncommutative balls, glued quantum spheres and their invariants", "ncball"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto common_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "ball-even, ball-odd, boundary-even, boundary-odd")->capture_default_str();
  };
  auto common_n = [&](CLI::App* sub, int hi) {
    sub->add_option("--n", o.n, "number of generators")->check(CLI::Range(1, hi))->capture_default_str();
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "deformation parameter in (0, 1)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--cutoff", o.cutoff, "levels per Fock axis")->check(CLI::Range(2, 64))->capture_default_str();
  };
  auto residuals = [&](CLI::App* sub) {
    sub->add_option("--margin", o.margin, "interior margin")->check(CLI::Range(0, 32))->capture_default_str();
    sub->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto thetas = [&](CLI::App* sub) {
    sub->add_option("--thetas", o.thetas, "size of the theta grid")->check(CLI::Range(1, 256))->capture_default_str();
  };
  auto max_len = [&](CLI::App* sub) {
    sub->add_option("--max-len", o.max_len, "path length truncation")->check(CLI::Range(1, 12))->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "relations and positivity on the representation catalog");
  common_family(verify);
  common_n(verify, 4);
  numeric(verify);
  residuals(verify);
  thetas(verify);

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  common_family(nf);
  common_n(nf, 16);
  nf->add_option("--expr", o.expr, "expression, e.g. \"z2'*z2\"")->required();

  auto* kt = app.add_subcommand("ktheory", "K-theory and ideal lattice of a graph");
  kt->add_option("--graph", o.graph, "M, L-odd or L-even")->capture_default_str();
  common_n(kt, 12);
  kt->add_option("--edges", o.edges, "explicit graph \"N; a>b; ...\" (1-based)");

  auto* index = app.add_subcommand("index", "index map of a glued even sphere");
  index->add_option("--beta", o.beta, "identity or mirror")->capture_default_str();
  common_n(index, 8);
  max_len(index);
  index->add_option("--phases", o.phases_deg, "phase angles in degrees, one per generator")->delimiter(',');

  auto* mirror = app.add_subcommand("mirror", "mirror versus identity gluing");
  common_n(mirror, 4);
  numeric(mirror);
  thetas(mirror);
  max_len(mirror);

  auto* reps = app.add_subcommand("reps", "representation catalog and injectivity");
  common_family(reps);
  common_n(reps, 4);
  numeric(reps);
  thetas(reps);

  auto* suspend = app.add_subcommand("suspend", "quantum double suspension of sigma");
  common_n(suspend, 3);
  numeric(suspend);
  residuals(suspend);
  suspend->add_option("--levels", o.levels, "levels of the new axis (0: same as --cutoff)")->check(CLI::Range(0, 64))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.verb = app.get_subcommands().front()->get_name();
  o.format = format == "text" ? Format::text : Format::json;
  if (o.q <= 0.0 || o.q >= 1.0) {
    err << "error: --q must lie strictly between 0 and 1\n";
    return 2;
  }

  try {
    const Outcome res = run(o);
    if (o.format == Format::json)
      out << res.json.dump(2) << "\n";
    else
      out << res.text;
    return res.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n  " << o.expr << "\n  " << std::string(e.position(), ' ') << "^\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ncball"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ncball::cli
