#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellref/config.hpp"
#include "ellref/errors.hpp"
#include "ellref/gridfield.hpp"
#include "ellref/reflectcore.hpp"
#include "ellref/reflected.hpp"
#include "ellref/riemann.hpp"
#include "ellref/suite.hpp"

namespace {

using nlohmann::json;
using namespace ellref;

Vec2 parse_point(const std::string& s) {
  Vec2 p;
  char tail;
  if (std::sscanf(s.c_str(), "%lf,%lf%c", &p.x, &p.y, &tail) != 2)
    throw config_error("expected a point as x,y: '" + s + "'");
  return p;
}

RunConfig load_config(const std::string& path) {
  if (path.empty()) {
    RunConfig cfg;
    cfg.field = circle_mode(cfg.op, cfg.curve, 1);
    return cfg;
  }
  return RunConfig::from_file(path);
}

json strategy_json(const ReflectionStrategy& s) {
  static const char* names[] = {"schwarz_p2p", "line_p2p", "gauge_p2p", "nonlocal"};
  return {{"kind", names[static_cast<int>(s.kind)]}, {"reason", s.reason}};
}

int cmd_reflect(const std::string& config_path, const std::string& point_str,
                bool force_nonlocal) {
  RunConfig cfg = load_config(config_path);
  if (!cfg.field) throw config_error("reflect needs a field entry in the config");
  const Vec2 p = parse_point(point_str);
  if (force_nonlocal) cfg.reflect_opt.force_nonlocal = true;

  const ReflectionReport rep = reflect(cfg.op, cfg.curve, *cfg.field, p, cfg.reflect_opt);
  const double truth = cfg.field->u(p.x, p.y);

  json out{{"point", {p.x, p.y}},
           {"field", cfg.field->label},
           {"strategy", strategy_json(rep.strategy)},
           {"u_reflected", rep.total},
           {"u_true", truth},
           {"abs_err", std::abs(rep.total - truth)},
           {"q_term", rep.q_term},
           {"integral", rep.integral},
           {"diag",
            {{"q", {rep.diag.q.x, rep.diag.q.y}},
             {"anchor", {rep.diag.anchor.x, rep.diag.anchor.y}},
             {"c0", rep.diag.c0},
             {"order", rep.diag.order},
             {"quad_error", rep.diag.quad_error},
             {"v_sup", rep.diag.v_sup},
             {"imag_residue", rep.diag.imag_residue},
             {"series_tail", rep.diag.series_tail}}}};
  if (!rep.path.empty()) {
    json path = json::array();
    for (const Vec2& v : rep.path) path.push_back({v.x, v.y});
    out["path"] = path;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& out_path) {
  const SuiteReport rep = run_suite();
  for (const auto& c : rep.results)
    std::printf("C%02d %-21s %s  measured=%.3g (tol %.3g)  [%.0f ms]\n", c.id, c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.measured, c.threshold, c.runtime_ms);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw config_error("cannot write " + out_path);
    f << rep.to_json();
  }
  std::printf("%s\n", rep.all_pass() ? "all criteria passed" : "some criteria FAILED");
  return rep.all_pass() ? 0 : 1;
}

int cmd_riemann(const std::string& config_path, const std::string& source_str,
                const std::string& corner_str, int n) {
  const RunConfig cfg = load_config(config_path);
  const CPoint p0 = CPoint::from_real(parse_point(source_str));
  const CPoint p1 = CPoint::from_real(parse_point(corner_str));

  const GoursatField g = riemann_goursat(cfg.op, p0, p1.z, p1.zeta, n);
  json out{{"source", {p0.x(), p0.y()}},
           {"corner", {p1.x(), p1.y()}},
           {"n", g.n},
           {"iterations", g.iterations},
           {"final_diff", g.final_diff},
           {"goursat", {g.corner().real(), g.corner().imag()}}};
  if (cfg.op.is_constant()) {
    const cplx ref = riemann_const(cfg.op, p0, p1);
    out["closed_form"] = {ref.real(), ref.imag()};
    out["abs_diff"] = std::abs(g.corner() - ref);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_monodromy(const std::string& config_path, const std::string& point_str, double rho,
                  int nquad, double phi0) {
  const RunConfig cfg = load_config(config_path);
  const CPoint p0 = CPoint::from_real(parse_point(point_str));
  const MonodromyResult m = monodromy_increment(cfg.op, cfg.curve, p0, rho, nquad, phi0);
  json out{{"source", {p0.x(), p0.y()}},
           {"rho", m.rho},
           {"increment", {m.increment.real(), m.increment.imag()}},
           {"predicted", {m.predicted.real(), m.predicted.imag()}},
           {"winding1", m.winding1},
           {"winding2", m.winding2}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_grid(const std::string& config_path, const std::string& out_path) {
  const RunConfig cfg = load_config(config_path);
  if (!cfg.field) throw config_error("grid needs a field entry in the config");
  const std::string csv =
      emit_grid(cfg.op, cfg.curve, *cfg.field, cfg.grid, cfg.reflect_opt, cfg.parallel);
  const std::string dest = out_path.empty() ? cfg.output : out_path;
  if (dest.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(dest);
    if (!f) throw config_error("cannot write " + dest);
    f << csv;
    std::fprintf(stderr, "wrote %s\n", dest.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytic continuation of elliptic PDE solutions across curves where they vanish"};
  app.require_subcommand(1);

  std::string config_path, point_str, out_path, source_str = "0,0", corner_str;
  bool force_nonlocal = false;
  double rho = 1e-2, phi0 = 0.5 * kPi;
  int nquad = 256, n_nodes = 24;

  auto* reflect_cmd = app.add_subcommand("reflect", "continue the field across the curve");
  reflect_cmd->add_option("--point", point_str, "target point x,y")->required();
  reflect_cmd->add_option("--config", config_path, "JSON run configuration");
  reflect_cmd->add_flag("--force-nonlocal", force_nonlocal,
                        "use the integral formula even when a point law applies");

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification battery");
  verify_cmd->add_option("--out", out_path, "write the JSON report here");

  auto* riemann_cmd = app.add_subcommand("riemann", "Riemann function of the adjoint operator");
  riemann_cmd->add_option("--source", source_str, "source point x,y");
  riemann_cmd->add_option("--corner", corner_str, "evaluation point x,y")->required();
  riemann_cmd->add_option("--n", n_nodes, "collocation order per direction");
  riemann_cmd->add_option("--config", config_path, "JSON run configuration");

  auto* mono_cmd = app.add_subcommand("monodromy", "loop increment around the reflected source");
  mono_cmd->add_option("--point", point_str, "source point x,y")->required();
  mono_cmd->add_option("--rho", rho, "loop radius");
  mono_cmd->add_option("--nquad", nquad, "loop samples");
  mono_cmd->add_option("--phi0", phi0, "loop base angle");
  mono_cmd->add_option("--config", config_path, "JSON run configuration");

  auto* grid_cmd = app.add_subcommand("grid", "emit the comparison grid as CSV");
  grid_cmd->add_option("--config", config_path, "JSON run configuration")->required();
  grid_cmd->add_option("--out", out_path, "CSV destination (default: config output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (reflect_cmd->parsed()) return cmd_reflect(config_path, point_str, force_nonlocal);
    if (verify_cmd->parsed()) return cmd_verify(out_path);
    if (riemann_cmd->parsed()) return cmd_riemann(config_path, source_str, corner_str, n_nodes);
    if (mono_cmd->parsed()) return cmd_monodromy(config_path, point_str, rho, nquad, phi0);
    if (grid_cmd->parsed()) return cmd_grid(config_path, out_path);
  } catch (const config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
