#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pappus/analysis.hpp"
#include "pappus/dual_pipeline.hpp"
#include "pappus/error.hpp"
#include "pappus/incidence_matrix.hpp"
#include "pappus/lattice.hpp"
#include "pappus/relabel.hpp"
#include "pappus/sampling.hpp"
#include "pappus/scalar_text.hpp"
#include "pappus/scene_file.hpp"
#include "pappus/svg.hpp"

namespace pappus::cli {

using nlohmann::json;

namespace {

struct Common {
  std::string field = "rational";
  std::string a;
  std::string b;
  std::string scene_path;
  std::string out_path;
  std::vector<std::string> sigma;
  bool strict = false;
  bool timing = false;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "rational | symbolic | quadext")->capture_default_str();
  cmd->add_option("--a", c.a, "parameter a");
  cmd->add_option("--b", c.b, "parameter b");
  cmd->add_option("--scene", c.scene_path, "scene JSON file");
  cmd->add_option("--out", c.out_path, "output file (default: stdout)");
  cmd->add_option("--sigma", c.sigma, "permutation(s): id, t2, t3, t3^2, t2t3, t2t3^2 or one-line (2 1 3)");
  cmd->add_flag("--strict", c.strict, "require six distinct Pappus lines");
  cmd->add_flag("--timing", c.timing, "include elapsed time in reports");
  cmd->add_option("--seed", c.seed, "seed for random sampling")->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SceneFile scene_file_of(const Common& c) {
  SceneFile f;
  if (!c.scene_path.empty()) f = parse_scene_file(read_file(c.scene_path));
  if (c.scene_path.empty() || !c.a.empty() || !c.b.empty()) f.field = parse_field_tag(c.field);
  if (!c.a.empty()) f.a = c.a;
  if (!c.b.empty()) f.b = c.b;
  if (f.a.empty() && f.b.empty() && !f.points && f.field == FieldTag::symbolic) {
    f.a = "a";
    f.b = "b";
  }
  if (f.a.empty() != f.b.empty()) throw Error(ErrorCode::ParseError, "--a and --b must be given together");
  if (f.a.empty() && !f.points) throw Error(ErrorCode::ParseError, "no parameters: give --a and --b or --scene");
  return f;
}

std::vector<Perm3> sigmas_of(const Common& c) {
  std::vector<Perm3> out;
  for (const auto& s : c.sigma) out.push_back(Perm3::parse(s));
  if (out.empty()) out.push_back(Perm3::identity());
  return out;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + c.out_path);
  f << text;
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DegenerateParameters:
    case ErrorCode::FieldMismatch:
    case ErrorCode::InvalidInitialData:
    case ErrorCode::AllPointsAtInfinity:
    case ErrorCode::PoleAtPoint:
    case ErrorCode::DivisionByZero:
    case ErrorCode::IncompatibleLabeling:
    case ErrorCode::DuplicateLines:
      return true;
    default:
      return false;
  }
}

bool applicable(const std::string& theorem, FieldTag field) {
  if (theorem == "super") return field == FieldTag::rational;
  if (theorem == "lattice") return field != FieldTag::symbolic;
  return true;
}

int cmd_verify(const Common& c, const std::string& theorem, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SceneFile file = scene_file_of(c);
  VerdictReport report;
  report.input["field"] = std::string(to_string(file.field));
  report.input["theorem"] = theorem;
  if (file.a.empty()) {
    const ExplicitPoints pts = explicit_points(file);
    TheoremEntry e{"pappus", {}, {}};
    e.add("C1, C2, C3 collinear", verify_pappus(pts.a, pts.b));
    const auto cpts = pappus_c_points(pts.a, pts.b, Perm3::identity());
    for (std::size_t k = 0; k < 3; ++k) e.witnesses[fmt::format("C{}", k + 1)] = cpts[k].to_string();
    report.entries.push_back(std::move(e));
  } else {
    report.input["a"] = file.a;
    report.input["b"] = file.b;
    const PappusScene scene = scene_from_file(file, {.strict = c.strict});
    if (theorem == "all") {
      for (const auto& name : theorem_names()) {
        if (applicable(name, scene.field())) report.entries.push_back(verify_theorem(name, scene));
      }
    } else {
      report.entries.push_back(verify_theorem(theorem, scene));
    }
  }
  if (c.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  emit(c, report.to_json(), out);
  return report.pass() ? kPass : kVerificationFailed;
}

struct RenderFlags {
  std::string chart = "auto";
  bool s_lines = false;
  bool show_s = false;
  bool allow_infinite = false;
};

int cmd_render(const Common& c, const RenderFlags& r, std::ostream& out, std::ostream& err) {
  const SceneFile file = scene_file_of(c);
  const PappusScene scene = scene_from_file(file, {.strict = c.strict});
  SvgOptions opts;
  opts.render = file.render;
  opts.sigmas = sigmas_of(c);
  opts.s_lines = r.s_lines;
  opts.show_s = r.show_s;
  opts.allow_infinite = r.allow_infinite;
  if (r.chart != "auto") opts.chart = parse_chart(r.chart);
  const SvgResult res = render_svg(scene, opts);
  for (const auto& w : res.warnings) err << "warning: " << w << "\n";
  emit(c, res.svg, out);
  return kPass;
}

std::vector<BigRational> parse_values(const std::string& text) {
  std::vector<BigRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(BigRational::parse(item));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty value list");
  return out;
}

std::vector<BigRational> parse_grid(const std::string& text) {
  std::stringstream ss(text);
  std::string lo, hi, step;
  if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, step)) {
    throw Error(ErrorCode::ParseError, "grid must be lo:hi:step");
  }
  const BigRational l = BigRational::parse(lo), h = BigRational::parse(hi), s = BigRational::parse(step);
  if (s.sign() <= 0) throw Error(ErrorCode::ParseError, "grid step must be positive");
  if (h < l) throw Error(ErrorCode::ParseError, "grid upper bound below lower bound");
  std::vector<BigRational> out;
  for (BigRational v = l; v <= h; v += s) {
    out.push_back(v);
    if (out.size() > 10000) throw Error(ErrorCode::ParseError, "grid too large");
  }
  return out;
}

std::string scan_row(const BigRational& a, const BigRational& b) {
  std::string row = a.to_string() + "," + b.to_string() + ",";
  if (!is_nondegenerate(a, b)) return row + "degenerate,,,,\n";
  std::string glue;
  for (const Perm3& s : vanishing_glue(a, b)) glue += (glue.empty() ? "" : " ") + s.name();
  bool is_super = false;
  std::string t2, t3;
  try {
    is_super = super_report(a, b).is_super;
    const PappusScene scene = canonical_scene(Scalar(a), Scalar(b));
    std::vector<HomTriple> joins;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) joins.push_back(scene.join_line(i, j));
    }
    const IntersectionLattice lat = build_lattice(joins);
    t2 = std::to_string(lat.t(2));
    t3 = std::to_string(lat.t(3));
  } catch (const Error&) {
    return row + "degenerate," + glue + ",,,\n";
  }
  return row + "ok," + glue + "," + (is_super ? "true" : "false") + "," + t2 + "," + t3 + "\n";
}

struct ScanFlags {
  std::string a_values;
  std::string b_values;
  std::string grid;
  std::size_t random = 0;
};

int cmd_scan(const Common& c, const ScanFlags& f, std::ostream& out) {
  std::string csv = "a,b,status,glue,super,t2,t3\n";
  if (f.random > 0) {
    ParameterSampler sampler(c.seed);
    for (std::size_t i = 0; i < f.random; ++i) {
      const BigRational a = sampler.next_rational();
      const BigRational b = sampler.next_rational();
      csv += scan_row(a, b);
    }
  } else {
    const std::string harmonic = "-1,1/2,2";
    const auto as = !f.grid.empty() ? parse_grid(f.grid) : parse_values(f.a_values.empty() ? harmonic : f.a_values);
    const auto bs = !f.grid.empty() ? parse_grid(f.grid) : parse_values(f.b_values.empty() ? harmonic : f.b_values);
    for (const auto& a : as) {
      for (const auto& b : bs) csv += scan_row(a, b);
    }
  }
  emit(c, csv, out);
  return kPass;
}

json lattice_json(const IntersectionLattice& lat, const std::vector<std::string>& labels) {
  json j;
  j["n"] = lat.n();
  json t = json::object();
  for (const auto& [k, count] : lat.t_vector()) t[std::to_string(k)] = count;
  j["t"] = t;
  j["counting_identity"] = check_counting_identity(lat);
  j["lines"] = labels;
  json pts = json::array();
  for (const auto& p : lat.points()) pts.push_back({{"point", p.point.to_string()}, {"lines", p.lines}});
  j["points"] = pts;
  return j;
}

int cmd_lattice(const Common& c, const std::string& which, bool matrix, std::ostream& out) {
  const PappusScene scene = scene_from_file(scene_file_of(c), {.strict = c.strict});
  const Perm3 sigma = sigmas_of(c).front();
  if (matrix) {
    emit(c, incidence_matrix(scene, sigma).to_csv(), out);
    return kPass;
  }
  std::vector<HomTriple> lines;
  std::vector<std::string> labels;
  if (which == "joins") {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        lines.push_back(scene.join_line(i, j));
        labels.push_back(fmt::format("L(A{},B{})", i, j));
      }
    }
  } else if (which == "configuration") {
    lines = configuration_lines(configuration_of(scene, sigma));
    labels = incidence_row_labels();
  } else if (which == "pappus") {
    lines = scene.pappus_lines();
    for (const Perm3& s : Perm3::all()) labels.push_back("L_C," + s.name());
  } else {
    throw Error(ErrorCode::ParseError, "unknown line family '" + which + "'");
  }
  const IntersectionLattice lat = build_lattice(lines);
  emit(c, lattice_json(lat, labels).dump(2) + "\n", out);
  return check_counting_identity(lat) ? kPass : kVerificationFailed;
}

json by_sigma(const std::vector<HomTriple>& v) {
  json j = json::object();
  for (const Perm3& s : Perm3::all()) j[s.name()] = v.at(s.index()).to_string();
  return j;
}

int cmd_dual(const Common& c, std::ostream& out) {
  const PappusScene scene = scene_from_file(scene_file_of(c), {.strict = c.strict});
  const SecondStageRoles roles = default_second_stage_roles();
  const DualRoundTrip rt = run_round_trip(scene, roles);
  json j;
  j["dual_points"] = by_sigma(rt.dual_points);
  j["M1"] = rt.m_lines.m1.to_string();
  j["M2"] = rt.m_lines.m2.to_string();
  j["second_stage_lines"] = by_sigma(rt.second_stage_lines);
  j["returned_points"] = by_sigma(rt.returned_points);
  json landing = {{"L_A", json::array()}, {"L_B", json::array()}};
  for (std::size_t i : rt.landing.on_la) landing["L_A"].push_back(Perm3::all()[i].name());
  for (std::size_t i : rt.landing.on_lb) landing["L_B"].push_back(Perm3::all()[i].name());
  j["landing"] = landing;
  json role_json = {{"A", json::array()}, {"B", json::array()}};
  for (const Perm3& s : roles.a_role) role_json["A"].push_back(s.name());
  for (const Perm3& s : roles.b_role) role_json["B"].push_back(s.name());
  j["second_stage_roles"] = role_json;
  bool ok = true;
  if (scene.field() == FieldTag::symbolic) {
    ok = single_parameter_check(rt.returned_points, rt.landing);
    j["single_parameter"] = ok;
  }
  emit(c, j.dump(2) + "\n", out);
  return ok ? kPass : kVerificationFailed;
}

int cmd_report(const Common& c, std::ostream& out) {
  const SceneFile file = scene_file_of(c);
  if (file.field != FieldTag::rational || file.a.empty()) {
    throw Error(ErrorCode::FieldMismatch, "report needs rational parameters");
  }
  const BigRational a = parse_scalar(file.a, FieldTag::rational).rational();
  const BigRational b = parse_scalar(file.b, FieldTag::rational).rational();
  const SuperReport r = super_report(a, b);
  const auto opt = [](const std::optional<BigRational>& v) { return v ? json(v->to_string()) : json(nullptr); };
  const auto matching = [](const std::array<std::optional<Perm3>, 3>& m, char prefix) {
    json j = json::object();
    for (std::size_t i = 0; i < 3; ++i) j[fmt::format("{}{}", prefix, i + 1)] = m[i] ? json(m[i]->name()) : json(nullptr);
    return j;
  };
  json j;
  j["a"] = a.to_string();
  j["b"] = b.to_string();
  j["is_super"] = r.is_super;
  j["clauses"] = {{"i", r.is_super}, {"ii", r.pair_through_s}, {"iii", r.all_harmonic}};
  j["clauses_agree"] = r.clauses_agree();
  j["a_class"] = opt(r.a_class);
  j["b_class"] = opt(r.b_class);
  j["a_matching"] = matching(r.a_matching, 'A');
  j["b_matching"] = matching(r.b_matching, 'B');
  json s_lines = json::array();
  for (const Perm3& s : r.s_lines) s_lines.push_back(s.name());
  j["s_lines"] = s_lines;
  j["harmonic"] = {{"A", r.harmonic_verdicts[0]}, {"B", r.harmonic_verdicts[1]}, {"C", r.harmonic_verdicts[2]}};
  json ratios = {{"A1,A2,A3,S", r.a_ratio.to_string()}, {"B1,B2,B3,S", r.b_ratio.to_string()}};
  for (const auto& [s, v] : r.c_ratios) ratios["C1,C2,C3,S;" + s.name()] = v.to_string();
  j["cross_ratios"] = ratios;
  json glue = json::object();
  for (const auto& g : glue_conditions()) {
    glue[g.sigma.name()] = {{"poly", g.poly.to_string()}, {"vanishes", g.poly.eval(a, b).is_zero()}};
  }
  j["glue"] = glue;
  emit(c, j.dump(2) + "\n", out);
  return r.clauses_agree() ? kPass : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Pappus configurations, their duals and special positions", "pappus"};
  app.require_subcommand(1);

  Common common;
  std::string theorem = "all";
  RenderFlags render;
  ScanFlags scan;
  std::string lattice_lines = "joins";
  bool lattice_matrix = false;

  auto* verify = app.add_subcommand("verify", "verify theorem clauses on a scene");
  add_common(verify, common);
  verify->add_option("--theorem", theorem, "all | pappus | roundtrip | incidence | lattice | s-incidence | super")
      ->capture_default_str();

  auto* rnd = app.add_subcommand("render", "write an SVG figure of a rational scene");
  add_common(rnd, common);
  rnd->add_option("--chart", render.chart, "auto | z | p,q,r (affine chart p x + q y + r z = 1)")->capture_default_str();
  rnd->add_flag("--s-lines", render.s_lines, "also draw the Pappus lines through S");
  rnd->add_flag("--show-s", render.show_s, "always mark S");
  rnd->add_flag("--allow-infinite", render.allow_infinite, "drop points at infinity with a warning");

  auto* scn = app.add_subcommand("scan", "CSV scan of glue conditions, super verdicts and lattices");
  add_common(scn, common);
  scn->add_option("--a-values", scan.a_values, "comma-separated values of a");
  scn->add_option("--b-values", scan.b_values, "comma-separated values of b");
  scn->add_option("--grid", scan.grid, "lo:hi:step for both parameters");
  scn->add_option("--random", scan.random, "number of random pairs (uses --seed)");

  auto* lat = app.add_subcommand("lattice", "intersection lattice of a line family");
  add_common(lat, common);
  lat->add_option("--lines", lattice_lines, "joins | configuration | pappus")->capture_default_str();
  lat->add_flag("--matrix", lattice_matrix, "print the incidence matrix as CSV instead");

  auto* dl = app.add_subcommand("dual", "dualize, rebuild and dualize back");
  add_common(dl, common);

  auto* rep = app.add_subcommand("report", "super Pappus report for rational parameters");
  add_common(rep, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*verify) return cmd_verify(common, theorem, out);
    if (*rnd) return cmd_render(common, render, out, err);
    if (*scn) return cmd_scan(common, scan, out);
    if (*lat) return cmd_lattice(common, lattice_lines, lattice_matrix, out);
    if (*dl) return cmd_dual(common, out);
    if (*rep) return cmd_report(common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kInputError : kVerificationFailed;
  }
  return kInputError;
}

}  // namespace pappus::cli
