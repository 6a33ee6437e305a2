// Command-line front end: convexification, barrier checks, stability
// reports, and the built-in demo scenarios.
//
// Exit codes: 0 success / verdict True, 1 verdict False or failed assertion,
// 2 parse error, 3 degenerate data, 4 solver non-convergence, 5 undecided.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include <opaque/json_io.hpp>
#include <opaque/scenarios.hpp>

#include "svg.hpp"

namespace {

using namespace opaque;

constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitNoConvergence = 4;
constexpr int kExitUndecided = 5;

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::True: return 0;
    case Verdict::False: return kExitFalse;
    default: return kExitUndecided;
  }
}

struct CliError {
  int code;
  std::string message;
};

Barrier load_barrier(const std::string& path) {
  return barrier_from_json(load_json_file(path));
}

Polytope load_body(const std::string& path) {
  Polytope P = polytope_from_json(load_json_file(path));
  if (P.lower_dimensional)
    throw CliError{kExitDegenerate, "body must be full-dimensional: " + path};
  return P;
}

int cmd_convexify(const std::string& barrier_file, const std::string& out_file,
                  const std::string& svg_file, const std::string& body_file,
                  double tol, int max_iter) {
  Barrier B = load_barrier(barrier_file);
  Polytope co;
  if (B.dim == 2) {
    co = convexify_2d(B);
  } else {
    DirectionalMeasure mu = orientation_measure(B);
    auto report = validate_minkowski_data(mu);
    if (!report.pass) throw CliError{kExitDegenerate, "barrier data: " + report.violation};
    MinkowskiOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    MinkowskiSolution sol = solve_minkowski(mu, opts);
    for (const auto& [it, res] : sol.log) {
      Json line;
      line["iteration"] = it;
      line["residual"] = res;
      std::cout << line.dump() << '\n';
    }
    co = sol.polytope;
  }
  Json out = to_json(co);
  out[B.dim == 2 ? "perimeter" : "surface_area"] = surface_area(co);
  save_json_file(out_file, out);

  if (!svg_file.empty()) {
    if (B.dim != 2) {
      std::cerr << "svg rendering is planar only, skipping\n";
    } else {
      svg::Scene scene;
      scene.barrier = &B;
      scene.convexification = &co;
      Polytope body;
      if (!body_file.empty()) {
        body = load_body(body_file);
        scene.body = &body;
      }
      svg::write_scene(svg_file, scene);
    }
  }
  Json summary;
  summary["file"] = out_file;
  summary[B.dim == 2 ? "perimeter" : "surface_area"] = surface_area(co);
  summary["barrier_area"] = B.surface_area();
  std::cout << summary.dump() << '\n';
  return 0;
}

int cmd_check(const std::string& barrier_file, const std::string& body_file,
              const std::string& mode, std::uint64_t seed, std::uint64_t lines,
              const std::string& out_file) {
  Barrier B = load_barrier(barrier_file);
  Polytope K = load_body(body_file);
  if (B.dim != K.dim) throw CliError{kExitParse, "barrier and body dimensions differ"};

  Json report;
  int code = 0;
  if (mode == "weak" || mode == "both") {
    CertifiedBool cb = is_weak_barrier(B, K);
    report["weak"] = to_json(cb);
    code = verdict_exit(cb.verdict);
  }
  if (mode == "strong" || mode == "both") {
    McReport mc = strong_barrier_mc(B, K, lines, seed);
    report["strong"] = to_json(mc);
    if (code == 0 && mc.misses > 0) code = kExitFalse;
  }
  report["jones_deficit"] = jones_deficit(B, K);
  std::cout << report.dump(2) << '\n';
  if (!out_file.empty()) save_json_file(out_file, report);
  return code;
}

int cmd_stability(const std::string& barrier_file, const std::string& body_file,
                  double eps, const std::string& csv_file, const std::string& out_file) {
  Barrier B = load_barrier(barrier_file);
  Polytope K = load_body(body_file);
  if (B.dim != K.dim) throw CliError{kExitParse, "barrier and body dimensions differ"};

  CertifiedBool weak = is_weak_barrier(B, K);
  if (weak.verdict != Verdict::True) {
    Json refusal;
    refusal["error"] = "not a verified weak barrier";
    refusal["weak"] = to_json(weak);
    std::cout << refusal.dump(2) << '\n';
    return verdict_exit(weak.verdict);
  }
  StabilityReport rep = stability_report(B, K, eps);
  Json out = to_json(rep);
  std::cout << out.dump(2) << '\n';
  if (!out_file.empty()) save_json_file(out_file, out);
  if (!csv_file.empty()) {
    std::ofstream csv(csv_file);
    csv << beta_table_csv(rep);
  }
  return 0;
}

struct DemoCheck {
  std::string name;
  bool ok;
  double value;
};

int finish_demo(const std::string& name, std::vector<DemoCheck> checks, Json extra) {
  Json out;
  out["demo"] = name;
  bool all = true;
  Json jc = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["assertion"] = c.name;
    j["ok"] = c.ok;
    j["value"] = c.value;
    jc.push_back(j);
    if (!c.ok) all = false;
  }
  out["assertions"] = jc;
  for (auto& [k, v] : extra.items()) out[k] = v;
  out["passed"] = all;
  std::cout << out.dump(2) << '\n';
  if (!all) {
    for (const auto& c : checks)
      if (!c.ok) std::cerr << "failed assertion: " << c.name << " = " << c.value << '\n';
  }
  return all ? 0 : kExitFalse;
}

int demo_square_steiner() {
  Polytope Q = centered_unit_square();
  Barrier B = fig1_steiner_barrier();
  double len = B.surface_area();
  CertifiedBool weak = is_weak_barrier(B, Q);
  double deficit = jones_deficit(B, Q);
  std::vector<DemoCheck> checks = {
      {"length within 2.639 +- 0.001", std::fabs(len - 2.639) <= 1e-3, len},
      {"weak barrier (exact planar test)", weak.verdict == Verdict::True,
       weak.margin},
      {"jones deficit within 0.639 +- 0.001", std::fabs(deficit - 0.639) <= 1e-3, deficit},
  };
  Json extra;
  extra["weak"] = to_json(weak);
  return finish_demo("square-steiner", checks, extra);
}

int demo_half_boundary() {
  Polytope Q = centered_unit_square();
  Barrier B = half_boundary_barrier(Q);
  CertifiedBool weak = is_weak_barrier(B, Q);
  double deficit = jones_deficit(B, Q);
  double d = bounded_lipschitz_distance(blaschke_measure(Q), orientation_measure(B));
  std::vector<DemoCheck> checks = {
      {"weak barrier", weak.verdict == Verdict::True, weak.margin},
      {"zero deficit", std::fabs(deficit) < 1e-9, deficit},
      {"measures equal (d_bL < 1e-9)", d < 1e-9, d},
  };
  return finish_demo("half-boundary", checks, Json::object());
}

int demo_cylinder_3d() {
  CylinderReport rep = cylinder_counterexample(3.0, 3);
  std::vector<DemoCheck> checks = {
      {"projection bodies nest (certified)",
       rep.projection_containment.verdict == Verdict::True,
       rep.projection_containment.margin},
      {"certified at net level <= 6", rep.projection_containment.net_level <= 6,
       double(rep.projection_containment.net_level)},
      {"blaschke body escapes the convexification", !rep.blaschke_body_contained,
       rep.violating_vertex.norm()},
      {"projection areas below 1 + 1/s^2",
       rep.max_projection_area <= rep.projection_area_bound + 1e-9,
       rep.max_projection_area},
  };
  Json extra;
  extra["report"] = to_json(rep);
  return finish_demo("cylinder-3d", checks, extra);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opaque: barriers of convex bodies, convexifications, and stability"};
  app.require_subcommand(1);

  std::string barrier_file, body_file, out_file, svg_file, csv_file, mode = "weak";
  std::uint64_t seed = 0, lines = 100000;
  double tol = 1e-6, eps = 0.0;
  int max_iter = 500;
  std::string demo_name;

  auto* conv = app.add_subcommand("convexify", "construct co(B) from a barrier file");
  conv->add_option("barrier", barrier_file, "barrier JSON")->required();
  conv->add_option("out", out_file, "output polytope JSON")->required();
  conv->add_option("--svg", svg_file, "render the planar construction");
  conv->add_option("--body", body_file, "body JSON, drawn in the SVG");
  conv->add_option("--tol", tol, "solver residual tolerance");
  conv->add_option("--max-iter", max_iter, "solver iteration cap");

  auto* chk = app.add_subcommand("check", "weak/strong barrier status");
  chk->add_option("barrier", barrier_file, "barrier JSON")->required();
  chk->add_option("body", body_file, "body JSON")->required();
  chk->add_option("--mode", mode, "weak | strong | both")
      ->check(CLI::IsMember({"weak", "strong", "both"}));
  chk->add_option("--seed", seed, "RNG seed for line sampling");
  chk->add_option("--lines", lines, "number of sampled lines");
  chk->add_option("--out", out_file, "also write the report to a file");

  auto* stab = app.add_subcommand("stability", "deficit/stability report");
  stab->add_option("barrier", barrier_file, "barrier JSON")->required();
  stab->add_option("body", body_file, "body JSON")->required();
  stab->add_option("--eps", eps, "exponent shift epsilon");
  stab->add_option("--beta-csv", csv_file, "write the beta table as CSV");
  stab->add_option("--out", out_file, "also write the report to a file");

  auto* demo = app.add_subcommand("demo", "built-in scenarios with assertions");
  demo->add_option("name", demo_name, "square-steiner | half-boundary | cylinder-3d")
      ->required()
      ->check(CLI::IsMember({"square-steiner", "half-boundary", "cylinder-3d"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (conv->parsed()) return cmd_convexify(barrier_file, out_file, svg_file, body_file, tol, max_iter);
    if (chk->parsed()) return cmd_check(barrier_file, body_file, mode, seed, lines, out_file);
    if (stab->parsed()) return cmd_stability(barrier_file, body_file, eps, csv_file, out_file);
    if (demo->parsed()) {
      if (demo_name == "square-steiner") return demo_square_steiner();
      if (demo_name == "half-boundary") return demo_half_boundary();
      return demo_cylinder_3d();
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotConvergedError& e) {
    std::cerr << "solver did not converge: " << e.what()
              << " (best residual " << e.best.residual << ")\n";
    return kExitNoConvergence;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate data: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const InvalidDataError& e) {
    std::cerr << "invalid data: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 10;
  }
  return 0;
}
