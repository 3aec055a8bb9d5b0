#include "lpm/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>

#include "lpm/cutoff.hpp"
#include "lpm/io.hpp"
#include "lpm/localtrans.hpp"
#include "lpm/morse.hpp"
#include "lpm/pencil.hpp"
#include "lpm/radial.hpp"
#include "lpm/rng.hpp"

namespace lpm {

namespace {

using io::json;

struct Options {
  std::string file;
  std::string out;
  bool closed = false;
  std::string braid;
  int max_len = 0;
  bool trust = false;
  std::string auto_file;
  double k = 0, D = 0, c0 = 0;
  std::optional<double> deform_c0;
  int n = 2;
  std::uint64_t seed = 1;
  int trials = 100;
  double kappa = 0.2, delta = 0.1;
  int pexp = 2;
  int samples = 1000;
};

// Exit status plus the JSON document to emit.
struct Result {
  int code = 0;
  json doc;
};

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json conj_json(const GeneratorConjugate& g) { return to_string(g.word()); }

Result cmd_validate(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.file));
  json doc{{"valid", true}, {"fiber", io::fiber_to_json(p.fiber())}, {"cycles", p.size()},
           {"total_monodromy", io::element_to_json(total_monodromy(p))}};
  int code = 0;
  if (o.closed) {
    const bool closed = is_closed(p);
    doc["closed"] = closed;
    code = closed ? 0 : 1;
  }
  return {code, doc};
}

Result cmd_hurwitz(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.file));
  const Braid b = parse_braid(o.braid, p.size());
  const Pencil q = hurwitz_apply(b, p);
  const bool preserved = elem_eq(total_monodromy(p), total_monodromy(q));
  return {preserved ? 0 : 1, {{"pencil", io::pencil_to_json(q)}, {"total_monodromy_preserved", preserved}}};
}

Result cmd_matching(const Options& o) {
  if (o.max_len < 0) throw std::invalid_argument("--max-len must be >= 0");
  const Pencil p = io::pencil_from_json(io::read_json_file(o.file));
  ClassifyOptions opts;
  opts.trust_algebraic = o.trust;
  json arcs = json::array();
  int matching = 0;
  for (const Arc& a : enumerate_arcs(p, o.max_len)) {
    const auto [e1, e2] = supporting_pair(a);
    const auto [core, second] = canonical_supporting_pair(a);
    const ArcClass cls = classify_arc(a, p, opts);
    if (cls.kind == ArcKind::Matching) ++matching;
    json entry = io::arc_to_json(a);
    entry["supporting_pair"] = json::array({conj_json(e1), conj_json(e2)});
    entry["canonical_pair"] = json::array({"x" + std::to_string(core), to_string(second)});
    entry["labels"] = json::array({io::cycle_to_json(vanishing_label(p, e1)), io::cycle_to_json(vanishing_label(p, e2))});
    entry["class"] = to_string(cls.kind);
    if (!cls.reason.empty()) entry["reason"] = cls.reason;
    arcs.push_back(std::move(entry));
  }
  return {0, {{"max_len", o.max_len}, {"trust_algebraic", o.trust}, {"arcs", std::move(arcs)}, {"matching", matching}}};
}

Result cmd_gamma(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.file));
  const Automorphism a = io::automorphism_from_json(p.fiber(), p.size(), io::read_json_file(o.auto_file));
  const GammaReport r = gamma_report(a, p);
  json doc{{"member", r.member}};
  if (!r.member) {
    doc["generator"] = r.generator;
    doc["clause"] = r.clause;
    doc["lhs"] = r.lhs;
    doc["rhs"] = r.rhs;
  }
  return {r.member ? 0 : 1, doc};
}

Result cmd_cutoff(const Options& o) {
  const CutoffProfile prof = CutoffProfile::build(o.k, o.D, o.c0);
  const int samples = 10000;
  bool slope_ok = true;
  double worst = -std::numeric_limits<double>::infinity();
  const double lo = std::log(prof.inner_start()), hi = std::log(prof.outer_end());
  for (int i = 1; i < samples; ++i) {
    const double t = std::exp(lo + (hi - lo) * i / samples);
    const CutoffValue v = prof.eval(t);
    const double bound = -(0.5 + prof.eps()) / t;
    const double ratio = v.d1 / v.l;
    if (!(ratio < 0) || ratio < bound * (1 + 1e-12)) slope_ok = false;
    worst = std::max(worst, bound / ratio);
  }
  const bool inner_exact = prof(prof.D()) == std::pow(prof.k(), 0.25);
  const bool outer_exact = std::abs(prof(prof.outer_end()) - 1) <= 1e-9;
  const bool ok = slope_ok && inner_exact && outer_exact;
  json doc{{"k", o.k},
           {"D", o.D},
           {"c0", o.c0},
           {"eps", prof.eps()},
           {"a", prof.a()},
           {"min_k", CutoffProfile::min_k(o.D, o.c0)},
           {"bands", {{"inner", {prof.inner_start(), prof.inner_end()}}, {"outer", {prof.outer_start(), prof.outer_end()}}}},
           {"blend_powers", {prof.inner_power(), prof.outer_power()}},
           {"eps2_observed", prof.eps2_observed()},
           {"eps2_outer_observed", prof.eps2_outer_observed()},
           {"checks",
            {{"slope_inequality", slope_ok},
             {"slope_samples", samples - 1},
             {"l_at_D_exact", inner_exact},
             {"l_at_outer_end_is_1", outer_exact}}},
           {"ok", ok}};
  return {ok ? 0 : 1, doc};
}

Result cmd_deform(const Options& o) {
  if (o.n < 1 || o.n > 6) throw std::invalid_argument("--n must lie in 1..6");
  const double c0 = o.deform_c0.value_or(o.D);
  const CutoffProfile prof = CutoffProfile::build(o.k, o.D, c0);
  MorseModel m;
  m.dimension = o.n;
  CriticalPoint cp;
  cp.center = Eigen::VectorXd::Zero(o.n);
  for (int i = 0; i < o.n; ++i) cp.signs.push_back(i % 2 == 0 ? 1 : -1);
  m.points = {cp};
  const DeformedMorse h = deform_morse(m, prof);
  const DeformReport r = verify_deform_bounds(h);
  const bool ok = r.eta_observed > 0 && std::isfinite(r.max_grad) && std::isfinite(r.max_third);
  json doc{{"k", o.k},
           {"D", o.D},
           {"c0", c0},
           {"n", o.n},
           {"eps", prof.eps()},
           {"points", r.points},
           {"max_grad", r.max_grad},
           {"max_grad_over_D", r.max_grad / o.D},
           {"eta_observed", r.eta_observed},
           {"max_third", r.max_third},
           {"max_third_times_D", r.max_third * o.D},
           {"annulus_grad_ratio", r.annulus_grad_ratio},
           {"ok", ok}};
  return {ok ? 0 : 1, doc};
}

Result cmd_localtrans(const Options& o) {
  if (o.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  json trials = json::array();
  int success = 0;
  bool hard_ok = true;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t s = o.seed * 1000003ULL + static_cast<std::uint64_t>(i);
    const LocalTransInstance inst = random_instance(s, 1, 4, o.kappa, o.delta, o.pexp);
    double residual = 0;
    for (const auto& z : ball_grid(1, 1.1, 201)) {
      residual = std::max(residual, std::abs(s_residual(inst.p, inst.q, z, solve_w(inst.p, inst.q, z))));
    }
    json t{{"seed", s}, {"max_residual", residual}};
    if (residual >= 1e-10) hard_ok = false;
    try {
      const TransversalityCertificate c = find_good_w0(inst);
      const EtaCheck again =
          eta_transverse_check(perturbed_map(inst.p, inst.q, c.w0), ball_grid(1, 1.0, 2 * c.verify_per_axis - 1), c.sigma);
      ++success;
      if (!again.ok) hard_ok = false;
      t["certificate"] = {{"w0", cplx_json(c.w0)},
                          {"margin", c.margin},
                          {"sigma", c.sigma},
                          {"clearance_area", c.clearance_area},
                          {"clearance_ratio", c.clearance_ratio},
                          {"refined", c.refined},
                          {"grid", {c.z_per_axis, c.verify_per_axis, c.w_per_axis}},
                          {"reverified", again.ok}};
      if (!c.area_claim_holds) t["warning"] = "clearance area below 0.9 pi delta^2";
    } catch (const VerificationFailure& e) {
      t["failure"] = {{"point", cplx_json(e.point()(0))}, {"value", e.value()}, {"sigma_min", e.sigma_min()},
                      {"w0", cplx_json(e.w0())}};
    }
    trials.push_back(std::move(t));
  }
  const double rate = static_cast<double>(success) / o.trials;
  const bool ok = hard_ok && rate >= 0.95;
  return {ok ? 0 : 1,
          {{"seed", o.seed},
           {"trials", o.trials},
           {"kappa", o.kappa},
           {"delta", o.delta},
           {"pexp", o.pexp},
           {"sigma", o.delta * std::pow(std::log(1 / o.delta), -o.pexp)},
           {"success", success},
           {"success_rate", rate},
           {"results", std::move(trials)},
           {"ok", ok}}};
}

Result cmd_radial(const Options& o) {
  if (o.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  PortableRng rng(o.seed);
  double worst_det = 0, worst_eig = 0, worst_jac = 0;
  bool bounds = true;
  for (int i = 0; i < o.samples; ++i) {
    const int n = rng.integer(2, 5);
    const double A = rng.uniform(0.5, 3.0);
    const double alpha = 0.75 * (1 - rng.uniform());
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x(j) = rng.normal();
    x *= rng.uniform(0.1, 10.0) / x.norm();
    const RadialReport r = radial_map_check(power_profile(A, alpha), x);
    worst_det = std::max(worst_det, std::abs(r.det_numeric - r.det_closed) / std::abs(r.det_closed));
    worst_eig = std::max(worst_eig, r.eigen_rel_error);
    worst_jac = std::max(worst_jac, r.jacobian_rel_error);
    bounds = bounds && r.ok();
  }
  const bool ok = bounds && worst_det < 1e-6 && worst_eig < 1e-6 && worst_jac < 1e-6;
  return {ok ? 0 : 1,
          {{"samples", o.samples},
           {"seed", o.seed},
           {"max_det_rel_error", worst_det},
           {"max_eigen_rel_error", worst_eig},
           {"max_jacobian_rel_error", worst_jac},
           {"bounds_hold", bounds},
           {"ok", ok}}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lefschetz pencil monodromy calculus and numerical verifiers", "lpm"};
  app.require_subcommand(1);
  Options o;

  auto* pencil = app.add_subcommand("pencil", "Operations on pencil files");
  pencil->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Numerical verification suites");
  verify->require_subcommand(1);

  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "Write the report to this path"); };

  auto* validate = pencil->add_subcommand("validate", "Check a pencil file");
  validate->add_option("file", o.file)->required();
  validate->add_flag("--closed", o.closed, "Also require total monodromy = identity");
  add_out(validate);

  auto* hurwitz = pencil->add_subcommand("hurwitz", "Apply a Hurwitz move");
  hurwitz->add_option("file", o.file)->required();
  hurwitz->add_option("--braid", o.braid, "Braid word, e.g. \"s1 S2\"")->required();
  add_out(hurwitz);

  auto* matching = pencil->add_subcommand("matching", "Enumerate and classify arcs");
  matching->add_option("file", o.file)->required();
  matching->add_option("--max-len", o.max_len, "Maximal carrier length")->required();
  matching->add_flag("--trust-algebraic", o.trust, "Treat lower-bound intersection data as exact");
  add_out(matching);

  auto* gamma = pencil->add_subcommand("gamma-check", "Test membership in the stabilizer group");
  gamma->add_option("file", o.file)->required();
  gamma->add_option("--auto", o.auto_file, "Automorphism file")->required();
  add_out(gamma);

  auto* cutoff = verify->add_subcommand("cutoff", "Cut-off profile");
  cutoff->add_option("--k", o.k)->required();
  cutoff->add_option("--D", o.D)->required();
  cutoff->add_option("--c0", o.c0)->required();
  add_out(cutoff);

  auto* deform = verify->add_subcommand("deform", "Deformed Morse function bounds");
  deform->add_option("--k", o.k)->required();
  deform->add_option("--D", o.D)->required();
  deform->add_option("--n", o.n, "Dimension")->capture_default_str();
  deform->add_option("--c0", o.deform_c0, "Ball radius constant (default: D)");
  add_out(deform);

  auto* local = verify->add_subcommand("localtrans", "Symmetric local perturbation");
  local->add_option("--seed", o.seed)->required();
  local->add_option("--trials", o.trials)->required();
  local->add_option("--kappa", o.kappa)->capture_default_str();
  local->add_option("--delta", o.delta)->capture_default_str();
  local->add_option("--pexp", o.pexp)->capture_default_str();
  add_out(local);

  auto* radial = verify->add_subcommand("radial", "Radial rescaling lemma");
  radial->add_option("--samples", o.samples)->required();
  radial->add_option("--seed", o.seed)->capture_default_str();
  add_out(radial);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Result r;
  try {
    if (validate->parsed()) r = cmd_validate(o);
    else if (hurwitz->parsed()) r = cmd_hurwitz(o);
    else if (matching->parsed()) r = cmd_matching(o);
    else if (gamma->parsed()) r = cmd_gamma(o);
    else if (cutoff->parsed()) r = cmd_cutoff(o);
    else if (deform->parsed()) r = cmd_deform(o);
    else if (local->parsed()) r = cmd_localtrans(o);
    else if (radial->parsed()) r = cmd_radial(o);
  } catch (const CutoffThresholdError& e) {
    err << "error: " << e.what() << "\n";
    out << json{{"error", "threshold"}, {"min_k", e.min_k()}}.dump(2) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = r.doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    f << text;
  }
  return r.code;
}

}  // namespace lpm
