// Copyright 2026 The darboux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: find / sweep / verify / dynamics / parse.
// Reports are single JSON documents with a fixed field order and no
// timestamps, so identical configurations produce identical bytes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "darboux/dynamics.hpp"
#include "darboux/errors.hpp"
#include "darboux/field.hpp"
#include "darboux/parser.hpp"
#include "darboux/search.hpp"
#include "darboux/symmetry.hpp"
#include "darboux/version.hpp"

namespace {

using darboux::Field;
using darboux::Poly;
using darboux::Rat;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct FieldSource {
  std::string spec = "d2-neg";
  std::string a = "sym";
  std::string b = "sym";
};

Field load_field(const FieldSource& src) {
  Field f;
  if (src.spec == "d2-neg") {
    f = darboux::d2_field(darboux::FieldSign::negative);
  } else if (src.spec == "d2-pos") {
    f = darboux::d2_field(darboux::FieldSign::positive);
  } else if (src.spec.rfind("file:", 0) == 0) {
    std::string path = src.spec.substr(5);
    std::ifstream in(path);
    if (!in) throw darboux::Error("cannot open field file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    f = darboux::parse_field(buf.str());
  } else {
    throw darboux::Error("unknown field '" + src.spec +
                         "' (use d2-neg, d2-pos or file:<path>)");
  }

  auto value = [](const std::string& text, char sym) -> std::optional<Rat> {
    if (text == "sym") return std::nullopt;
    try {
      return Rat::from_string(text);
    } catch (const darboux::Error&) {
      throw darboux::Error(std::string("parameter ") + sym +
                           " must be a rational like 3 or -2/7 (floats are "
                           "not accepted), got '" +
                           text + "'");
    }
  };
  auto av = value(src.a, 'a');
  auto bv = value(src.b, 'b');
  if (av || bv) {
    using darboux::ParamPoly;
    f = darboux::substitute_params(
        f, av ? ParamPoly(*av) : ParamPoly::symbol_a(),
        bv ? ParamPoly(*bv) : ParamPoly::symbol_b());
  }
  return f;
}

json config_echo(const std::string& command, const FieldSource& src) {
  json c;
  c["command"] = command;
  c["field"] = src.spec;
  c["a"] = src.a;
  c["b"] = src.b;
  return c;
}

json result_to_json(const darboux::DarbouxResult& r) {
  json j;
  j["polynomial"] = r.f.str();
  j["cofactor"] = r.cofactor.str();
  j["degree"] = r.degree;
  j["parameter_condition"] = r.parameter_condition;
  j["generator"] = r.generator;
  j["first_integral"] = r.first_integral;
  j["verification"] = "exact";
  return j;
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw darboux::Error("cannot write '" + out_path + "'");
    out << text;
  }
}

void warn_if_not_equivariant(const Field& f) {
  if (!darboux::is_equivariant(f, darboux::d2_group())) {
    std::cerr << "warning: field is not equivariant under the sign-flip "
                 "group; the search covers constant cofactors only\n";
  }
}

std::vector<std::pair<Rat, Rat>> parse_grid(const std::string& spec) {
  auto axis = [](const std::string& part) {
    std::vector<Rat> out;
    std::size_t c1 = part.find(':');
    std::size_t c2 = part.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw darboux::Error("grid axis must be min:max:steps, got '" + part +
                           "'");
    Rat lo = Rat::from_string(part.substr(0, c1));
    Rat hi = Rat::from_string(part.substr(c1 + 1, c2 - c1 - 1));
    long steps = std::stol(part.substr(c2 + 1));
    if (steps < 1) throw darboux::Error("grid steps must be >= 1");
    if (steps == 1) {
      out.push_back(lo);
      return out;
    }
    Rat span = hi - lo;
    for (long i = 0; i < steps; ++i)
      out.push_back(lo + span * Rat(i, steps - 1));
    return out;
  };
  std::size_t comma = spec.find(',');
  if (comma == std::string::npos)
    throw darboux::Error("grid must be aMin:aMax:aSteps,bMin:bMax:bSteps");
  auto as = axis(spec.substr(0, comma));
  auto bs = axis(spec.substr(comma + 1));
  std::vector<std::pair<Rat, Rat>> grid;
  for (const Rat& a : as)
    for (const Rat& b : bs) grid.emplace_back(a, b);
  return grid;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_trajectory(const darboux::Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw darboux::Error("cannot write '" + path + "'");
  out << "t,x,y,z\n";
  for (const auto& [t, p] : traj.samples) {
    double time = traj.time_reversed ? -t : t;
    out << format_double(time) << ',' << format_double(p[0]) << ','
        << format_double(p[1]) << ',' << format_double(p[2]) << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_find(const FieldSource& src, int degree, bool check_equivariance,
             const std::string& out_path) {
  Field f = load_field(src);
  warn_if_not_equivariant(f);

  std::map<char, Rat> params;  // already substituted in load_field
  auto results = darboux::find_darboux(f, degree, params);
  std::vector<darboux::DarbouxResult> copy = results;
  auto gens = darboux::reduce_to_generators(copy, f);

  json report;
  report["version"] = darboux::kVersion;
  report["config"] = config_echo("find", src);
  report["config"]["degree"] = degree;
  report["results"] = json::array();
  for (const auto& r : results) {
    // every emitted "exact" row is re-checked right here
    if (!darboux::verify_darboux(f, r.f, r.cofactor))
      throw darboux::Error("internal error: emitted row fails verification");
    report["results"].push_back(result_to_json(r));
  }
  report["generators"] = json::object();
  report["generators"]["count"] = gens.generators.size();
  json notes = json::array();
  for (const auto& n : gens.closure_notes) notes.push_back(n);
  report["generators"]["closure_notes"] = notes;
  json evidence;
  evidence["results_total"] = results.size();
  if (check_equivariance)
    evidence["equivariant_d2"] =
        darboux::is_equivariant(f, darboux::d2_group());
  report["evidence"] = evidence;
  emit(report, out_path);
  return kExitOk;
}

int cmd_sweep(const FieldSource& src, int degree, const std::string& grid_spec,
              const std::string& out_path) {
  Field f = load_field(src);
  warn_if_not_equivariant(f);

  auto grid = parse_grid(grid_spec);
  // The special loci are always probed, whatever the grid: a = 1 and b = 1
  // rows, the diagonal, and the origin of parameter space.
  for (const Rat& t : {Rat(-2), Rat(-1), Rat(1, 2), Rat(2)}) {
    grid.emplace_back(Rat(1), t);
    grid.emplace_back(t, Rat(1));
    grid.emplace_back(t, t);
  }
  grid.emplace_back(Rat(1), Rat(1));
  grid.emplace_back(Rat(0), Rat(0));

  auto rows = darboux::parameter_sweep(f, degree, grid);

  json report;
  report["version"] = darboux::kVersion;
  report["config"] = config_echo("sweep", src);
  report["config"]["degree"] = degree;
  report["config"]["grid"] = grid_spec;
  report["results"] = json::array();
  report["unclassified"] = json::array();
  for (const auto& row : rows) {
    json j;
    j["condition"] = row.condition;
    j["polynomial"] = row.polynomial.str();
    j["cofactor"] = row.cofactor.str();
    j["first_integral"] = row.first_integral;
    j["verified"] = row.verified ? "exact" : "unverified";
    j["support_points"] = row.support_count;
    if (row.condition == "unclassified")
      report["unclassified"].push_back(j);
    else
      report["results"].push_back(j);
  }
  emit(report, out_path);
  return kExitOk;
}

int cmd_verify(const FieldSource& src, const std::string& poly_text,
               const std::string& cofactor_text, const std::string& format) {
  Field f = load_field(src);
  Poly p = darboux::parse_polynomial(poly_text);
  Poly k = darboux::parse_polynomial(cofactor_text);
  Poly residual = darboux::lie_derivative(f, p) - k * p;
  bool holds = residual.is_zero();

  if (format == "json") {
    json report;
    report["version"] = darboux::kVersion;
    report["config"] = config_echo("verify", src);
    report["config"]["polynomial"] = poly_text;
    report["config"]["cofactor"] = cofactor_text;
    report["identity"] = holds;
    report["residual"] = residual.str();
    emit(report, "");
  } else if (holds) {
    std::cout << "verified: exact identity\n";
  } else {
    std::cout << "failed: residual = " << residual.str() << "\n";
  }
  return holds ? kExitOk : kExitVerifyFailed;
}

int cmd_dynamics(const FieldSource& src, const darboux::DynOptions& opt,
                 double box, int seeds, int samples,
                 const std::string& dump_prefix, const std::string& out_path) {
  Field f = load_field(src);
  if (!f.is_param_free())
    throw darboux::Error("dynamics needs numeric --a/--b values");

  json report;
  report["version"] = darboux::kVersion;
  report["config"] = config_echo("dynamics", src);
  report["config"]["box"] = box;
  report["config"]["tmax"] = opt.tmax;
  report["config"]["step"] = opt.step;
  report["config"]["tol"] = opt.heteroclinic_tol;

  auto scan = darboux::find_fixed_points(f, -box, box, seeds, opt);
  json fps = json::array();
  for (const auto& rec : scan.points) {
    json j;
    j["location"] = {rec.location[0], rec.location[1], rec.location[2]};
    if (rec.exact) {
      j["exact"] = "(" + (*rec.exact)[0].str() + ", " + (*rec.exact)[1].str() +
                   ", " + (*rec.exact)[2].str() + ")";
    }
    json evs = json::array();
    for (const auto& ev : rec.eigenvalues)
      evs.push_back({ev.real(), ev.imag()});
    j["eigenvalues"] = evs;
    j["class"] = darboux::to_string(rec.stability);
    j["stable_manifold_dim"] = rec.stable_manifold_dim;
    fps.push_back(j);
  }
  report["fixed_points"] = fps;
  json axes = json::array();
  for (int axis : scan.degenerate_axes)
    axes.push_back(axis == 0 ? "x" : axis == 1 ? "y" : "z");
  report["degenerate_axes"] = axes;

  // Invariant-surface drift evidence: every degree-2 generator valid at
  // these parameters gets an exponential-invariance check.
  json drifts = json::array();
  int dump_index = 0;
  auto pairs = darboux::find_darboux(f, 2);
  for (const auto& r : pairs) {
    if (!r.generator) continue;
    Rat c0 = r.cofactor.is_zero()
                 ? Rat(0)
                 : r.cofactor.leading_coeff().constant_value();
    darboux::Vec3 x0{0.5, 1.0 / 3.0, 0.25};
    double drift =
        darboux::invariance_drift(f, r.f, c0, x0, opt.tmax, opt.step, opt);
    json j;
    j["polynomial"] = r.f.str();
    j["cofactor"] = r.cofactor.str();
    j["first_integral"] = r.first_integral;
    j["x0"] = {x0[0], x0[1], x0[2]};
    j["max_drift"] = drift;
    drifts.push_back(j);
    if (!dump_prefix.empty()) {
      auto traj = darboux::integrate(f, x0, opt.tmax, opt.step, opt);
      std::string path = dump_prefix;
      if (dump_index > 0) path += "." + std::to_string(dump_index);
      dump_trajectory(traj, path);
      ++dump_index;
    }
  }
  report["drift_checks"] = drifts;

  // Heteroclinic probe, when the configuration supports it.
  auto dp = f.linear_matrix();
  bool diag_neg_equal = f.is_builtin_d2() && f.linear_part_is_diagonal() &&
                        dp[0][0] == dp[1][1] &&
                        dp[0][0].constant_value().sign() < 0;
  if (diag_neg_equal &&
      f.builtin_sign() == darboux::FieldSign::negative) {
    auto hc = darboux::heteroclinic_probe(f, opt);
    json connections = json::array();
    for (const auto& c : hc.connections) {
      json j;
      j["equilibrium"] = {c.equilibrium[0], c.equilibrium[1], c.equilibrium[2]};
      j["plane"] = c.plane;
      j["connected"] = c.connected;
      j["direction"] = c.direction;
      j["plane_residual"] = c.plane_residual;
      j["closest_approach"] = c.closest_approach;
      j["method"] = c.method;
      connections.push_back(j);
    }
    report["heteroclinic"] = json::object();
    report["heteroclinic"]["tol"] = hc.tol;
    report["heteroclinic"]["connections"] = connections;
  }

  // Escape sampling: statistical evidence for "orbits tend to infinity"
  // claims, never a proof. Deterministic initial conditions.
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  auto next01 = [&state]() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return static_cast<double>((state * 0x2545F4914F6CDD1DULL) >> 11) /
           9007199254740992.0;
  };
  int escaped = 0, completed = 0;
  for (int i = 0; i < samples; ++i) {
    darboux::Vec3 x0{4 * next01() - 2, 4 * next01() - 2, 4 * next01() - 2};
    auto traj = darboux::integrate(f, x0, 40.0, opt.step, opt);
    if (traj.status == darboux::Trajectory::Status::escaped) ++escaped;
    else ++completed;
  }
  json esc;
  esc["samples"] = samples;
  esc["escaped"] = escaped;
  esc["completed"] = completed;
  report["escape_sampling"] = esc;

  emit(report, out_path);
  return kExitOk;
}

int cmd_parse(const FieldSource& src, bool check_equivariance,
              const std::string& format, const std::string& out_path) {
  Field f = load_field(src);
  if (format == "json") {
    json report;
    report["version"] = darboux::kVersion;
    report["config"] = config_echo("parse", src);
    report["field"] = darboux::render_field(f);
    if (check_equivariance)
      report["equivariant_d2"] =
          darboux::is_equivariant(f, darboux::d2_group());
    emit(report, out_path);
  } else {
    std::cout << darboux::render_field(f);
    if (check_equivariance) {
      std::cout << "# equivariant under the sign-flip group: "
                << (darboux::is_equivariant(f, darboux::d2_group()) ? "yes"
                                                                    : "no")
                << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant algebraic surfaces and first integrals of "
               "polynomial vector fields on R^3, over exact rational "
               "arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", darboux::kVersion);

  FieldSource src;
  int degree = 8;
  std::string out_path;
  std::string report_format = "json";  // find/sweep/dynamics
  std::string format = "text";         // verify/parse
  std::string grid_spec = "-2:2:5,-2:2:5";
  bool check_equivariance = false;
  std::string poly_text, cofactor_text;
  darboux::DynOptions opt;
  double box = 6.0;
  int seeds = 5;
  int samples = 200;
  std::string dump_prefix;

  auto add_field_opts = [&](CLI::App* cmd) {
    cmd->add_option("--field", src.spec,
                    "d2-neg, d2-pos or file:<path>")
        ->capture_default_str();
    cmd->add_option("--a", src.a, "rational value for a, or 'sym'")
        ->capture_default_str();
    cmd->add_option("--b", src.b, "rational value for b, or 'sym'")
        ->capture_default_str();
  };

  CLI::App* find = app.add_subcommand("find",
                                      "search for invariant polynomials up "
                                      "to a degree bound");
  add_field_opts(find);
  find->add_option("--degree", degree, "top degree bound")
      ->capture_default_str();
  find->add_flag("--check-equivariance", check_equivariance,
                 "record the symmetry check in the report");
  find->add_option("--format", report_format, "report format (json)");
  find->add_option("--out", out_path, "write the report to a file");

  CLI::App* sweep = app.add_subcommand("sweep",
                                       "classify parameter loci that admit "
                                       "invariant polynomials");
  add_field_opts(sweep);
  sweep->add_option("--degree", degree, "top degree bound")->default_val(4);
  sweep->add_option("--grid", grid_spec, "aMin:aMax:aSteps,bMin:bMax:bSteps")
      ->capture_default_str();
  sweep->add_option("--format", report_format, "report format (json)");
  sweep->add_option("--out", out_path, "write the report to a file");

  CLI::App* verify = app.add_subcommand("verify",
                                        "check L_X f = k f exactly (exit 1 "
                                        "when it fails)");
  add_field_opts(verify);
  verify->add_option("--poly", poly_text, "polynomial f")->required();
  verify->add_option("--cofactor", cofactor_text, "cofactor k")->required();
  verify->add_option("--format", format, "json or text");

  CLI::App* dynamics = app.add_subcommand("dynamics",
                                          "fixed points, stability, drift "
                                          "checks and connection probes");
  add_field_opts(dynamics);
  dynamics->add_option("--box", box, "search box half-width")
      ->capture_default_str();
  dynamics->add_option("--seeds", seeds, "Newton seeds per axis")
      ->capture_default_str();
  dynamics->add_option("--tmax", opt.tmax, "integration horizon")
      ->capture_default_str();
  dynamics->add_option("--step", opt.step, "integrator step")
      ->capture_default_str();
  dynamics->add_option("--tol", opt.heteroclinic_tol,
                       "connection detection tolerance")
      ->capture_default_str();
  dynamics->add_option("--newton-tol", opt.newton_tol, "equilibrium tolerance")
      ->capture_default_str();
  dynamics->add_option("--hyperbolic-tol", opt.hyperbolic_tol,
                       "hyperbolicity threshold on eigenvalue real parts")
      ->capture_default_str();
  dynamics->add_option("--perturbation", opt.perturbation,
                       "manifold launch offset")
      ->capture_default_str();
  dynamics->add_option("--samples", samples, "escape-sampling count")
      ->capture_default_str();
  dynamics->add_option("--dump", dump_prefix,
                       "write drift-check trajectories as CSV");
  dynamics->add_option("--format", report_format, "report format (json)");
  dynamics->add_option("--out", out_path, "write the report to a file");

  CLI::App* parse = app.add_subcommand("parse", "echo the canonical form");
  add_field_opts(parse);
  parse->add_flag("--check-equivariance", check_equivariance,
                  "also report the symmetry check");
  parse->add_option("--format", format, "json or text");
  parse->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if ((find->parsed() || sweep->parsed() || dynamics->parsed()) &&
        report_format != "json")
      throw darboux::Error("reports are structured JSON; --format " +
                           report_format + " applies to verify/parse only");
    if (find->parsed())
      return cmd_find(src, degree, check_equivariance, out_path);
    if (sweep->parsed()) return cmd_sweep(src, degree, grid_spec, out_path);
    if (verify->parsed())
      return cmd_verify(src, poly_text, cofactor_text, format);
    if (dynamics->parsed())
      return cmd_dynamics(src, opt, box, seeds, samples, dump_prefix,
                          out_path);
    if (parse->parsed())
      return cmd_parse(src, check_equivariance, format, out_path);
  } catch (const darboux::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
