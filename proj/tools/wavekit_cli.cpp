#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>

#include "wavekit/config.hpp"
#include "wavekit/diagnostics.hpp"
#include "wavekit/errors.hpp"
#include "wavekit/field_io.hpp"
#include "wavekit/fvm1d.hpp"
#include "wavekit/json_io.hpp"
#include "wavekit/structure_json.hpp"
#include "wavekit/svg.hpp"

using namespace wavekit;

namespace {

GasConstants gas_of(const RunConfig& cfg) {
  GasConstants k{cfg.get("A"), cfg.get("rho_star")};
  k.validate();
  return k;
}

ProblemInput wedge_of(const RunConfig& cfg) {
  ProblemInput in{cfg.get("u1"), cfg.get("c0"), cfg.get("c1"), cfg.get("theta0"), gas_of(cfg)};
  in.validate();
  return in;
}

RiemannData riemann_of(const RunConfig& cfg) {
  RiemannData d{{cfg.get("ul"), cfg.get("cl")}, {cfg.get("ur"), cfg.get("cr")}};
  validate(d.left);
  validate(d.right);
  return d;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& text) {
  const auto path = cfg.out_dir / name;
  write_text_file(path, text);
  std::cout << "wrote " << path.string() << '\n';
}

void emit_structure(const RunConfig& cfg, const std::string& stem, const WaveStructure& ws) {
  emit(cfg, stem + ".json", dump_json(to_json(ws)));
  if (cfg.svg) emit(cfg, stem + ".svg", to_svg(render_svg(ws)));
  std::cout << "regime " << to_string(ws.regime) << ", verdict " << to_string(ws.verdict) << '\n';
}

int run_riemann(const RunConfig& cfg) {
  const RiemannData d = riemann_of(cfg);
  const GasConstants k = gas_of(cfg);
  const RiemannSolution1D sol = solve(d);
  Json j;
  j["schema"] = "wavekit.riemann1d/1";
  j["input"] = Json{{"ul", d.left.u}, {"cl", d.left.c}, {"ur", d.right.u}, {"cr", d.right.c}, {"A", k.A},
                    {"rho_star", k.rho_star}};
  j["solvability"] = to_string(is_solvable(d));
  j["middle"] = Json{{"u", sol.middle.u}, {"c", sol.middle.c}, {"rho", density(sol.middle.c, k)}};
  j["speeds"] = Json::array({sol.speed1, sol.speed2});
  j["waves"] = Json::array({to_string(sol.label1), to_string(sol.label2)});
  const std::string text = dump_json(j);
  write_text_file(cfg.out_dir / "riemann1d.json", text);
  std::cout << text;
  return 0;
}

int run_fvm(const RunConfig& cfg) {
  const RiemannData d = riemann_of(cfg);
  const GasConstants k = gas_of(cfg);
  Grid1D g{cfg.get("x_min"), cfg.get("x_max"), cfg.get_int("n"), cfg.get("cfl")};
  g.validate();
  const double t_end = cfg.get("t_end");
  if (!(t_end > 0.0)) throw DomainError("t_end must be positive");
  const FvmResult r = run(g, d, t_end, k);
  emit(cfg, "fvm1d.csv", fvm_csv(r, k));
  Json j;
  j["schema"] = "wavekit.fvm1d/1";
  j["grid"] = Json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"n", g.n}, {"cfl", g.cfl}};
  j["data"] = Json{{"ul", d.left.u}, {"cl", d.left.c}, {"ur", d.right.u}, {"cr", d.right.c}, {"A", k.A},
                   {"rho_star", k.rho_star}};
  j["t_end"] = t_end;
  j["steps"] = r.steps;
  j["rejected_steps"] = r.rejected_steps;
  j["l1_error"] = r.l1_error;
  j["mass_defect"] = r.mass_defect();
  j["momentum_defect"] = r.momentum_defect();
  j["log"] = r.log;
  emit(cfg, "fvm1d_manifest.json", dump_json(j));
  std::cout << "L1 error " << format_double(r.l1_error) << " after " << r.steps << " steps\n";
  return 0;
}

int run_elliptic(const RunConfig& cfg) {
  const ProblemInput in = wedge_of(cfg);
  const WaveStructure ws = build_structure(in);
  if (ws.regime == Regime::Critical)
    throw StructureError("the critical regime has no elliptic problem to solve (its subsonic region is left open)");
  const SubsonicDomain dom = subsonic_domain(ws);
  EllipticOptions opt;
  opt.mesh.h = cfg.get("h");
  opt.eps = cfg.get("eps");
  opt.max_iter = cfg.get_int("max_iter");
  opt.tol_picard = cfg.get("tol");
  if (!(opt.mesh.h > 0.0) || opt.max_iter < 1 || !(opt.tol_picard > 0.0))
    throw UsageError("h, max_iter and tol must be positive");
  const PseudoPotentialField f = solve(dom, in.k, opt);

  emit(cfg, "field.csv", field_csv(f));
  emit(cfg, "convergence.csv", convergence_csv(f));
  Json j;
  j["schema"] = "wavekit.elliptic/1";
  j["structure"] = to_json(ws)["input"];
  j["regime"] = to_string(ws.regime);
  j["domain"] = dom.reflected ? "reflected" : "mixed";
  j["nodes"] = f.mesh.nodes.size();
  j["triangles"] = f.mesh.triangles.size();
  j["h"] = opt.mesh.h;
  j["B0"] = f.B0;
  j["eps"] = f.eps;
  j["iterations"] = f.history.size();
  j["final_increment"] = f.history.empty() ? 0.0 : f.history.back().increment;
  j["final_residual"] = f.final_residual;
  j["clipped_nodes"] = f.clipped_nodes;
  j["min_interior_excess"] = f.min_interior_excess();
  j["max_ellipticity_defect"] = f.max_ellipticity_defect(5.0 * opt.mesh.h);
  const auto probe = f.probe(dom.center);
  j["center"] = to_json(dom.center);
  j["center_probe"] = probe ? Json(*probe) : Json(nullptr);
  if (ws.regime == Regime::SubsonicCorner) {
    DiagnosticsOptions d;
    d.delta = cfg.get("delta");
    d.r_outer = cfg.get("r_outer");
    d.r_inner = cfg.get("r_inner");
    const CornerDiagnostics c = corner_diagnostics(f, ws, d);
    j["diagnostics"] = Json{{"delta", c.delta},
                            {"r_outer", c.r_outer},
                            {"r_inner", c.r_inner},
                            {"N_value", c.N_value},
                            {"term_gamma_minus", c.term_gamma_minus},
                            {"term_gamma_plus", c.term_gamma_plus},
                            {"term_inner_arc", c.term_inner_arc},
                            {"term_outer_arc", c.term_outer_arc},
                            {"ibp_residual", c.ibp_residual},
                            {"u_min_interior", c.u_min_interior},
                            {"active_elements", c.active_elements}};
  }
  emit(cfg, "elliptic.json", dump_json(j));
  std::cout << "converged in " << f.history.size() << " Picard iterations on " << f.mesh.nodes.size() << " nodes\n";
  return 0;
}

Json report_json(const WaveStructure& ws, const VerificationReport& rep) {
  double worst = 0.0;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    worst = std::max(worst, c.residual);
    checks.push_back(Json{{"name", c.name}, {"residual", c.residual}, {"passed", c.passed}});
  }
  return Json{{"input", to_json(ws)["input"]},   {"regime", to_string(ws.regime)}, {"passed", rep.passed},
              {"failures", rep.failures()},       {"max_residual", worst},          {"checks", checks}};
}

int run_verify(const RunConfig& cfg) {
  const double tol = cfg.get("tol");
  Json j;
  j["schema"] = "wavekit.verify/1";
  bool ok = true;
  const int cases = cfg.get_int("cases");
  if (cases <= 0) {
    const WaveStructure ws = build_structure(wedge_of(cfg));
    const VerificationReport rep = verify(ws, ws.input.k, tol);
    ok = rep.passed;
    j["cases"] = Json::array({report_json(ws, rep)});
  } else {
    const GasConstants k = gas_of(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit01(0.0, 1.0);
    j["seed"] = cfg.seed;
    Json list = Json::array();
    int skipped = 0;
    for (int i = 0; i < cases; ++i) {
      const double c0 = 0.5 + 2.5 * unit01(rng);
      const double c1 = 0.5 + 2.5 * unit01(rng);
      const double u1 = 0.98 * (c0 + c1) * unit01(rng);
      const double theta0 = 0.02 + 1.5 * unit01(rng);
      try {
        const WaveStructure ws = build_structure({u1, c0, c1, theta0, k});
        const VerificationReport rep = verify(ws, k, tol);
        ok = ok && rep.passed;
        Json r = report_json(ws, rep);
        r.erase("checks");
        list.push_back(r);
      } catch (const StructureError&) {
        ++skipped;  // construction inadmissible for this wedge angle
      }
    }
    j["inadmissible"] = skipped;
    j["cases"] = list;
  }
  j["passed"] = ok;
  emit(cfg, "verify.json", dump_json(j));
  std::cout << (ok ? "verification passed\n" : "verification FAILED\n");
  return ok ? 0 : 1;
}

int dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Riemann1D: return run_riemann(cfg);
    case Command::Structure: {
      const ProblemInput in = wedge_of(cfg);
      emit_structure(cfg, "structure", build_structure(in, cfg.get("tol")));
      return 0;
    }
    case Command::Diffraction: {
      const WaveStructure ws = build_shock_diffraction(cfg.get("u1"), cfg.get("c1"), cfg.get("theta0"), gas_of(cfg));
      emit_structure(cfg, "diffraction", ws);
      return 0;
    }
    case Command::Elliptic: return run_elliptic(cfg);
    case Command::Fvm1D: return run_fvm(cfg);
    case Command::Verify: return run_verify(cfg);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const RunConfig cfg = parse_config(argc, argv, std::getenv("WAVEKIT_OUT"));
    if (cfg.help) {
      std::cout << cfg.help_text;
      return 0;
    }
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n(run with --help for the list of commands and options)\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "inadmissible configuration: " << e.what() << '\n';
    return 3;
  } catch (const UnsolvableError& e) {
    std::cerr << "unsolvable data: " << e.what() << '\n';
    return 3;
  } catch (const InteractionError& e) {
    std::cerr << "inadmissible interaction: " << e.what() << '\n';
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return 4;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate discrete problem: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
