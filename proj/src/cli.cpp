#include "tkk/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tkk/homology.hpp"
#include "tkk/log.hpp"
#include "tkk/spec_io.hpp"
#include "tkk/uce.hpp"

namespace tkk::cli {

namespace {

const std::vector<std::string> kCommands{"check", "build", "h2", "hc1", "verify", "steinberg", "growth"};

struct Outcome {
  Json result = Json::object();
  bool passed = true;
};

bool is_fixture(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

SpecObject load_base(const std::string& base) {
  if (is_fixture(base)) return fixture(base);
  if (base.find('/') == std::string::npos && base.find('.') == std::string::npos) return fixture(base);
  return parse_spec(base);
}

Algebra load_algebra_base(const std::string& base) {
  SpecObject obj = load_base(base);
  if (auto* a = std::get_if<Algebra>(&obj)) return std::move(*a);
  throw KindError("'" + base + "' describes a triple system; this command needs an algebra");
}

Json report_json(const IdentityReport& r, const BasedSpace& space) {
  Json j;
  j["identity"] = r.identity;
  j["holds"] = r.holds;
  j["cases"] = r.cases_checked;
  if (!r.holds) j["witness"] = r.describe(space);
  return j;
}

TripleSystem triple_of(const SpecObject& obj) {
  if (auto* t = std::get_if<TripleSystem>(&obj)) return *t;
  const Algebra& a = std::get<Algebra>(obj);
  if (a.kind == AlgebraKind::jordan) return triple_from_jordan(a);
  if (a.kind == AlgebraKind::associative) return triple_from_associative(a);
  throw KindError("a triple system needs an associative or Jordan algebra, got " + to_string(a.kind));
}

void guard_wedge(const Algebra& g, Index max_dim) {
  const Index wd = g.dim() * (g.dim() - (g.dim() ? 1 : 0)) / 2;
  if (wd > max_dim)
    throw ResourceError("dim wedge^2 " + g.name + " = " + std::to_string(wd) + " exceeds the guard " +
                        std::to_string(max_dim));
}

Algebra lie_of(const Algebra& a, int n) {
  if (a.kind == AlgebraKind::lie) return a;
  return sl_n(a, n).lie;
}

Outcome cmd_check(const CommandConfig& c) {
  Outcome o;
  SpecObject obj;
  try {
    obj = load_base(c.base);
  } catch (const ValidationError& e) {
    o.passed = false;
    o.result["object"] = c.base;
    o.result["checks"] = Json::array({Json{{"identity", e.report().identity},
                                           {"holds", false},
                                           {"cases", e.report().cases_checked},
                                           {"witness", e.what()}}});
    return o;
  }
  Json checks = Json::array();
  auto record = [&](const IdentityReport& r, const BasedSpace& space) {
    checks.push_back(report_json(r, space));
    if (!r.holds) o.passed = false;
  };
  if (auto* t = std::get_if<TripleSystem>(&obj)) {
    o.result["object"] = t->name;
    record(check_jts(*t), t->space);
  } else {
    const Algebra& a = std::get<Algebra>(obj);
    o.result["object"] = a.name;
    o.result["dim"] = a.dim();
    const std::string kind = c.kind.empty() ? to_string(a.kind) : c.kind;
    o.result["kind"] = kind;
    if (kind == "jts") {
      TripleSystem t = triple_of(obj);
      record(check_jts(t), t.space);
    } else {
      switch (parse_kind(kind)) {
        case AlgebraKind::associative: record(check_identity(a, Identity::associativity), a.space); break;
        case AlgebraKind::lie:
          record(check_identity(a, Identity::anticommutativity), a.space);
          record(check_identity(a, Identity::jacobi), a.space);
          break;
        case AlgebraKind::jordan: record(check_identity(a, Identity::jordan), a.space); break;
        case AlgebraKind::untagged: break;
      }
    }
    if (a.unit) o.result["unit"] = format_vector(*a.unit, a.space);
  }
  o.result["checks"] = checks;
  return o;
}

Outcome cmd_build(const CommandConfig& c) {
  if (c.args.empty()) throw ParseError("build needs a target: sl, plus, matrix, triple, tkk or uce");
  const std::string& what = c.args[0];
  Outcome o;
  o.result["target"] = what;
  if (what == "tkk" || what == "triple") {
    TripleSystem t = triple_of(load_base(c.base));
    if (what == "triple") {
      o.result["triple"] = triple_to_json(t);
      return o;
    }
    UniversalTkk u = universal_tkk(t, TkkOptions{c.fast, c.max_dim});
    GradedLie s = standard_tkk(t);
    LinearMap f = canonical_surjection(u.k, s);
    IdentityReport hom = check_lie_homomorphism(f, u.k.lie, s.lie);
    Subspace ker = kernel_basis(f);
    IdentityReport central = check_central(ker, u.k.lie);
    const bool onto = f.rank() == s.lie.dim();
    o.result["triple"] = t.name;
    auto du = u.k.dims(), ds = s.dims();
    o.result["dims_universal"] = {du[0], du[1], du[2]};
    o.result["dims_standard"] = {ds[0], ds[1], ds[2]};
    o.result["w_dim"] = u.stats.w_dim;
    o.result["seed_rank"] = u.stats.seed_rank;
    o.result["kernel_dim_over_standard"] = ker.dim();
    o.result["surjection_homomorphism"] = hom.holds;
    o.result["surjection_onto"] = onto;
    o.result["kernel_central"] = central.holds;
    o.result["graded_lie"] = graded_to_json(u.k, ker.dim());
    o.passed = hom.holds && onto && central.holds;
    return o;
  }
  Algebra base = load_algebra_base(c.base);
  if (what == "uce") {
    Algebra g = lie_of(base, c.n ? c.n : 2);
    guard_wedge(g, c.max_dim);
    CentralExtension e = build_uce(g);
    o.result["lie"] = g.name;
    o.result["dim_lie"] = g.dim();
    o.result["dim_uce"] = e.total.dim();
    o.result["h2_dim"] = e.h2_dim();
    o.result["algebra"] = algebra_to_json(e.total);
    return o;
  }
  Algebra built;
  if (what == "sl") {
    SlAlgebra sl = sl_n(base, c.n ? c.n : 2);
    const bool gen = sl_generated_equals_trace_subspace(sl);
    o.result["generated_equals_trace_subspace"] = gen;
    o.passed = gen;
    built = sl.lie;
  } else if (what == "plus") {
    built = plus_algebra(base);
  } else if (what == "matrix") {
    built = matrix_algebra(base, c.n ? c.n : 2);
  } else {
    throw ParseError("unknown build target '" + what + "'");
  }
  o.result["dim"] = built.dim();
  o.result["algebra"] = algebra_to_json(built);
  return o;
}

Outcome cmd_h2(const CommandConfig& c) {
  Outcome o;
  Algebra base = load_algebra_base(c.base);
  const int n = c.n ? c.n : 2;
  Algebra g = lie_of(base, n);
  guard_wedge(g, c.max_dim);
  CentralExtension e = build_uce(g);
  o.result["lie"] = g.name;
  o.result["dim_lie"] = g.dim();
  o.result["dim_uce"] = e.total.dim();
  o.result["h2_dim"] = e.h2_dim();
  if (base.kind == AlgebraKind::associative && base.unit) o.result["hc1_dim"] = hc1_dim(base);
  return o;
}

Outcome cmd_hc1(const CommandConfig& c) {
  Outcome o;
  Algebra a = load_algebra_base(c.base);
  ConnesComplex cx = connes_complex(a);
  o.result["algebra"] = a.name;
  o.result["complex"] = cx.is_complex();
  o.result["hc1_dim"] = hc1_dim(cx);
  return o;
}

Json iso_json(const IsoReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["base"] = r.base;
  j["dim_uce"] = r.dim_uce;
  j["dim_tkk"] = r.dim_tkk;
  j["h2_dim"] = r.h2_dim;
  j["iso"] = r.iso;
  if (r.witness) j["witness"] = *r.witness;
  j["tkk_w_dim"] = r.tkk_w_dim;
  j["dims_equal"] = r.dims_equal;
  j["well_defined"] = r.well_defined;
  j["homomorphism"] = r.homomorphism;
  j["bijective"] = r.bijective;
  j["grading_consistent"] = r.grading_consistent;
  j["generator_map"] = r.chosen;
  Json cands = Json::array();
  for (const auto& cand : r.candidates) {
    Json x;
    x["assignment"] = cand.name;
    x["well_defined"] = cand.well_defined;
    x["homomorphism"] = cand.hom.hom.holds;
    x["rank"] = cand.hom.rank;
    if (!cand.witness.empty()) x["witness"] = cand.witness;
    cands.push_back(x);
  }
  j["candidates"] = cands;
  if (r.theorem == "thm32") {
    j["relations"] = {{"abelian", r.relation_abelian},
                      {"t_x12", r.relation_plus},
                      {"t_x21", r.relation_minus},
                      {"t_x21_literal_x12_rhs", r.relation_minus_literal}};
  }
  return j;
}

Outcome cmd_verify(const CommandConfig& c) {
  if (c.args.empty()) throw ParseError("verify needs a theorem: thm32 or thm41");
  Outcome o;
  Algebra a = load_algebra_base(c.base);
  TkkOptions opts{c.fast, c.max_dim};
  IsoReport r;
  if (c.args[0] == "thm32") {
    guard_wedge(sl_n(a, 2).lie, c.max_dim);
    r = verify_thm32(a, opts);
  } else if (c.args[0] == "thm41") {
    const Index dim = 15 * a.dim() + commutator_subspace(a).dim();
    if (dim * (dim - 1) / 2 > c.max_dim)
      throw ResourceError("dim wedge^2 sl4 = " + std::to_string(dim * (dim - 1) / 2) + " exceeds the guard " +
                          std::to_string(c.max_dim));
    r = verify_thm41(a, opts);
  } else {
    throw ParseError("unknown theorem '" + c.args[0] + "'");
  }
  o.result = iso_json(r);
  o.passed = r.iso && (r.theorem != "thm32" || (r.relation_abelian && r.relation_plus && r.relation_minus));
  return o;
}

Outcome cmd_steinberg(const CommandConfig& c) {
  Outcome o;
  Algebra a = load_algebra_base(c.base);
  SlAlgebra sl = sl_n(a, c.n ? c.n : 4);
  guard_wedge(sl.lie, c.max_dim);
  CentralExtension e = build_uce(sl.lie);
  IdentityReport r = steinberg_check(e, sl);
  o.result["lie"] = sl.lie.name;
  o.result["dim_uce"] = e.total.dim();
  o.result["h2_dim"] = e.h2_dim();
  o.result["check"] = report_json(r, e.total.space);
  o.passed = r.holds;
  return o;
}

Outcome cmd_growth(const CommandConfig& c) {
  Outcome o;
  std::vector<GrowthRow> rows = growth_report(c.d_max, c.max_dim);
  Json table = Json::array();
  bool monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.push_back(Json{{"d", rows[i].d}, {"dim_a", rows[i].dim_a}, {"dim_sl2", rows[i].dim_sl2}, {"h2", rows[i].h2}});
    if (i && rows[i].dim_sl2 < rows[i - 1].dim_sl2) monotone = false;
  }
  o.result["rows"] = table;
  o.result["sl2_dims_nondecreasing"] = monotone;
  return o;
}

void render_text(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(os, value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render_text(os, item, indent + 4);
      }
    } else if (value.is_string()) {
      os << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << pad << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

RunResult run(const CommandConfig& config) {
  log::set_verbose(config.verbose);
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = config.command;
  report["args"] = config.args;
  report["base"] = config.base;
  int code = Exit::ok;
  try {
    if (config.max_dim == 0) throw ParseError("--max-dim must be positive");
    Outcome o;
    if (config.command == "check") o = cmd_check(config);
    else if (config.command == "build") o = cmd_build(config);
    else if (config.command == "h2") o = cmd_h2(config);
    else if (config.command == "hc1") o = cmd_hc1(config);
    else if (config.command == "verify") o = cmd_verify(config);
    else if (config.command == "steinberg") o = cmd_steinberg(config);
    else if (config.command == "growth") o = cmd_growth(config);
    else throw ParseError("unknown command '" + config.command + "'");
    report["result"] = o.result;
    report["ok"] = o.passed;
    code = o.passed ? Exit::ok : Exit::failed;
  } catch (const ValidationError& e) {
    report["ok"] = false;
    report["error"] = {{"type", "validation"}, {"message", e.what()}};
    code = Exit::failed;
  } catch (const ParseError& e) {
    report["ok"] = false;
    report["error"] = {{"type", "parse"}, {"message", e.what()}};
    code = Exit::usage;
  } catch (const ResourceError& e) {
    report["ok"] = false;
    report["error"] = {{"type", "resource"}, {"message", e.what()}};
    code = Exit::error;
  } catch (const Error& e) {
    report["ok"] = false;
    report["error"] = {{"type", "error"}, {"message", e.what()}};
    code = Exit::error;
  }
  RunResult out;
  out.exit_code = code;
  if (config.format == "machine") {
    out.report = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    render_text(os, report, 0);
    out.report = os.str();
  }
  return out;
}

int main(int argc, char** argv) {
  CLI::App app{"Exact TKK and universal central extension toolkit"};
  CommandConfig c;
  app.add_option("command", c.command, "check | build | h2 | hc1 | verify | steinberg | growth")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("args", c.args, "build target or theorem name");
  app.add_option("--base", c.base, "fixture name or spec file")->capture_default_str();
  app.add_option("--n", c.n, "matrix size for sl_n")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "write the report to this file");
  app.add_option("--format", c.format, "text or machine")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  app.add_flag("--fast", c.fast, "randomized seeding before the full enumeration");
  app.add_option("--max-dim", c.max_dim, "resource guard on working dimensions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--kind", c.kind, "check: associative | lie | jordan | jts")
      ->check(CLI::IsMember({"associative", "lie", "jordan", "untagged", "jts"}));
  app.add_option("--d-max", c.d_max, "growth: largest truncation degree")->check(CLI::Range(1, 6))->capture_default_str();
  app.add_flag("--verbose,-v", c.verbose, "phase timings on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : Exit::usage;
  }
  RunResult r = run(c);
  if (c.out.empty()) {
    std::cout << r.report;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << c.out << "\n";
      return Exit::error;
    }
    f << r.report;
  }
  if (r.exit_code != Exit::ok && c.format == "text" && !c.out.empty()) std::cerr << r.report;
  return r.exit_code;
}

}  // namespace tkk::cli
