// Command line front end: reproducible verification runs over the library,
// reported as canonical JSON (exit 0 all checks pass, 1 a check failed,
// 2 bad input).

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "imprim/continuum.hpp"
#include "imprim/serialize.hpp"

using namespace imprim;

namespace {

struct Options {
  std::string group = "S3";
  std::string subgroup = "trivial";
  std::string sigma = "irrep:0";
  std::string pi = "induced";
  std::string povm = "canonical";
  std::string theta = "uniform";
  std::string admissible;  // file, or empty to generate
  std::string signal = "builtin";
  std::uint64_t seed = 7;
  double tol = kDefaultTol;
  int torus_n = 8;
  std::string output = "-";
  std::string format = "json";
};

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot read " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("ParseError", std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

GroupPtr resolve_group(const Options& opt) {
  if (std::filesystem::exists(opt.group)) return group_from_json(load_json_file(opt.group));
  return catalog(opt.group);
}

Subgroup resolve_subgroup(const GroupPtr& g, const std::string& spec) {
  if (spec == "trivial") return trivial_subgroup(g);
  if (spec == "full") return full_subgroup(g);
  if (spec == "center") return center_subgroup(g);
  if (!spec.empty() && spec[0] == 'A') {
    // Alternating subgroup of a symmetric group: the commutator subgroup.
    std::vector<int> comms;
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b)
        comms.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
    return subgroup_from_generators(g, comms);
  }
  if (spec.rfind("gen:", 0) == 0) {
    std::vector<int> gens;
    std::stringstream ss(spec.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ',')) gens.push_back(std::stoi(tok));
    return subgroup_from_generators(g, gens);
  }
  if (std::filesystem::exists(spec))
    return subgroup_from_json(load_json_file(spec), g);
  fail("ParseError", "unknown subgroup spec: " + spec);
}

UnitaryRep resolve_irrep(const GroupPtr& g, const std::string& spec,
                         std::uint64_t seed, double tol) {
  if (spec == "trivial") return trivial_rep(g);
  if (spec == "regular") return left_regular(g);
  if (spec.rfind("irrep:", 0) == 0) {
    const int index = std::stoi(spec.substr(6));
    const auto reps = irreducibles(g, seed, tol);
    if (index < 0 || index >= static_cast<int>(reps.size()))
      fail("ParseError", "irrep index out of range: " + spec);
    return reps[index];
  }
  if (std::filesystem::exists(spec)) {
    UnitaryRep rep = rep_from_json(load_json_file(spec));
    if (!same_group(*rep.group, *g))
      fail("ValidationError", "representation in " + spec + " lives on another group");
    rep.group = g;
    const RepReport report = validate_rep(rep, tol);
    if (!report.pass)
      fail("ValidationError",
           "representation in " + spec + " fails validation, residual " +
               std::to_string(std::max(report.unitarity_residual,
                                       report.homomorphism_residual)));
    return rep;
  }
  fail("ParseError", "unknown representation spec: " + spec);
}

ThetaWeight resolve_theta(const Subgroup& h, const Options& opt) {
  if (opt.theta == "uniform") return theta_uniform(h);
  if (opt.theta == "random") return theta_random(h, opt.seed);
  fail("ParseError", "theta must be uniform or random");
}

struct Bundle {
  GroupPtr group;
  Subgroup sub;
  UnitaryRep sigma;
  ThetaWeight theta;
  InducedRep ind;
};

Bundle resolve_bundle(const Options& opt) {
  Bundle b;
  b.group = resolve_group(opt);
  b.sub = resolve_subgroup(b.group, opt.subgroup);
  b.sigma = resolve_irrep(b.sub.group, opt.sigma, opt.seed, opt.tol);
  b.theta = resolve_theta(b.sub, opt);
  b.ind = induce(b.sigma, coset_space(b.group, b.sub), b.theta);
  return b;
}

Povm resolve_povm(const Bundle& b, const Options& opt) {
  if (opt.povm == "canonical") return canonical_povm(b.ind);
  if (opt.povm.rfind("compress:", 0) == 0) {
    const std::uint64_t salt = std::stoull(opt.povm.substr(9));
    return random_covariant_povm(b.ind, opt.seed + salt, opt.tol).povm;
  }
  if (std::filesystem::exists(opt.povm)) {
    Povm e = povm_from_json(load_json_file(opt.povm));
    const PovmReport report = validate_povm(e, opt.tol);
    if (!report.pass) fail("ValidationError", "POVM in " + opt.povm + " fails validation");
    return e;
  }
  fail("ParseError", "unknown povm spec: " + opt.povm);
}

Json inputs_json(const Options& opt, std::initializer_list<const char*> keys) {
  Json j;
  for (const char* key : keys) {
    const std::string k = key;
    if (k == "group") j["group"] = opt.group;
    if (k == "subgroup") j["subgroup"] = opt.subgroup;
    if (k == "sigma") j["sigma"] = opt.sigma;
    if (k == "pi") j["pi"] = opt.pi;
    if (k == "povm") j["povm"] = opt.povm;
    if (k == "theta") j["theta"] = opt.theta;
    if (k == "signal") j["signal"] = opt.signal;
    if (k == "n") j["n"] = opt.torus_n;
  }
  return j;
}

// ---- commands ----

Report cmd_list_groups(const Options& opt) {
  Report report;
  report.command = "list-groups";
  report.inputs = Json::object();
  Json names = Json::array();
  for (const auto& n : catalog_names()) names.push_back(n);
  report.checks.push_back({"catalog", true, Json{{"families", names}}});
  if (!opt.group.empty() && opt.group != "S3") {
    const GroupPtr g = resolve_group(opt);
    Json subs = Json::array();
    for (const auto& h : subgroup_class_representatives(g))
      subs.push_back(Json{{"order", h.order()}, {"elements", h.elements}});
    report.checks.push_back(
        {"subgroup-classes", true,
         Json{{"group", g->name()}, {"order", g->order()}, {"classes", subs}}});
  }
  return report;
}

Report cmd_induce(const Options& opt) {
  Report report;
  report.command = "induce";
  report.inputs = inputs_json(opt, {"group", "subgroup", "sigma", "theta"});
  const Bundle b = resolve_bundle(opt);
  const RepReport validity = validate_rep(b.ind.rep, opt.tol);
  const double gram = (theta_gram(b.ind) -
                       Matrix::Identity(b.ind.rep.dim, b.ind.rep.dim))
                          .norm();
  report.checks.push_back(
      {"unitary-homomorphism", validity.pass,
       Json{{"unitarity", validity.unitarity_residual},
            {"homomorphism", validity.homomorphism_residual}}});
  report.checks.push_back({"theta-gram-identity", gram <= opt.tol * 10, Json{{"residual", gram}}});
  report.checks.push_back(
      {"dimension", b.ind.rep.dim == b.ind.blocks() * b.ind.block_dim(),
       Json{{"dim", b.ind.rep.dim}, {"cosets", b.ind.blocks()}, {"sigma_dim", b.ind.block_dim()}}});
  report.extra = Json{{"induced", rep_to_json(b.ind.rep)}};
  return report;
}

Report cmd_frobenius(const Options& opt) {
  Report report;
  report.command = "frobenius-check";
  report.inputs = inputs_json(opt, {"group", "subgroup", "sigma", "pi"});
  const Bundle b = resolve_bundle(opt);
  const UnitaryRep pi = opt.pi == "induced"
                            ? b.ind.rep
                            : resolve_irrep(b.group, opt.pi, opt.seed, opt.tol);
  const int lhs = hom_dimension(pi, b.ind.rep, opt.tol);
  const int rhs = hom_dimension(restrict_rep(pi, b.sub), b.sigma, opt.tol);
  report.checks.push_back({"frobenius-reciprocity", lhs == rhs,
                           Json{{"dim_hom_pi_ind", lhs}, {"dim_hom_res_sigma", rhs}}});
  return report;
}

AdmissibleMap resolve_admissible(const Bundle& b, const UnitaryRep& pi,
                                 const Options& opt) {
  if (!opt.admissible.empty())
    return admissible_from_json(load_json_file(opt.admissible), pi);
  // Generated default: a seeded generic intertwiner read back through the
  // base block (a frame whenever pi embeds with full multiplicity).
  Prng rng(opt.seed ^ 0xadf11e);
  const Matrix w = project_to_hom(pi, b.ind.rep,
                                  random_matrix(rng, b.ind.rep.dim, pi.dim));
  return admissible_from_intertwiner(w, pi, b.ind, opt.tol);
}

Report cmd_frame_analyze(const Options& opt) {
  Report report;
  report.command = "frame-analyze";
  report.inputs = inputs_json(opt, {"group", "subgroup", "sigma", "pi", "theta"});
  const Bundle b = resolve_bundle(opt);
  const UnitaryRep pi = opt.pi == "induced"
                            ? b.ind.rep
                            : resolve_irrep(b.group, opt.pi, opt.seed, opt.tol);

  const SquareIntegrability sq = square_integrable_mod(pi, b.sub, b.sigma, opt.seed, opt.tol);
  Json mults = Json::array();
  for (const auto& [in_pi, in_ind] : sq.multiplicities)
    mults.push_back(Json{{"in_pi", in_pi}, {"in_ind", in_ind}});
  report.checks.push_back({"square-integrable", sq.verdict, Json{{"multiplicities", mults}}});

  const AdmissibleMap a = sq.witness ? *sq.witness : resolve_admissible(b, pi, opt);
  const AdmissibilityReport adm = check_admissible(a, opt.tol);
  const auto [alpha, beta] = frame_bounds(a);
  report.checks.push_back({"admissible", adm.pass,
                           Json{{"semi_residual", adm.semi_residual}, {"beta", adm.beta}}});
  report.extra = Json{{"alpha", alpha},
                      {"beta", beta},
                      {"tight", is_tight(a, opt.tol)},
                      {"A", matrix_to_json(a.a)}};
  return report;
}

Report cmd_tighten(const Options& opt) {
  Report report;
  report.command = "tighten";
  report.inputs = inputs_json(opt, {"group", "subgroup", "sigma", "pi", "theta"});
  const Bundle b = resolve_bundle(opt);
  const UnitaryRep pi = opt.pi == "induced"
                            ? b.ind.rep
                            : resolve_irrep(b.group, opt.pi, opt.seed, opt.tol);
  const AdmissibleMap a = resolve_admissible(b, pi, opt);
  const auto [alpha, beta] = frame_bounds(a);
  const AdmissibleMap tight = tighten(a, opt.tol);
  const auto [ta, tb] = frame_bounds(tight);
  const double idem = (tighten(tight, opt.tol).a - tight.a).norm();
  report.checks.push_back({"tight-after", is_tight(tight, opt.tol),
                           Json{{"alpha", ta}, {"beta", tb}}});
  report.checks.push_back({"idempotent", idem <= opt.tol * 100, Json{{"residual", idem}}});
  report.extra = Json{{"alpha_before", alpha},
                      {"beta_before", beta},
                      {"A0", matrix_to_json(tight.a)}};
  return report;
}

Report cmd_mackey_extract(const Options& opt) {
  Report report;
  report.command = "mackey-extract";
  report.inputs = inputs_json(opt, {"group", "subgroup", "sigma", "povm", "theta"});
  const Bundle b = resolve_bundle(opt);
  const Povm e = resolve_povm(b, opt);
  const MackeyResult result = extract(e, opt.tol, b.theta);
  const ProjectivityReport proj = projectivity_check(result, e, opt.tol);

  const double gate = opt.tol * (1.0 + result.e_of_x.norm());
  report.checks.push_back({"uno-intertwines", result.residuals.uno <= gate,
                           Json{{"residual", result.residuals.uno}}});
  report.checks.push_back({"due-reconstructs", result.residuals.due <= gate,
                           Json{{"residual", result.residuals.due}}});
  report.checks.push_back(
      {"tre-spans", result.residuals.tre_rank == result.residuals.tre_expected,
       Json{{"rank", result.residuals.tre_rank},
            {"expected", result.residuals.tre_expected}}});
  report.checks.push_back({"isometry", result.residuals.isometry <= gate,
                           Json{{"residual", result.residuals.isometry}}});
  report.checks.push_back({"projectivity-consistent", proj.consistent(),
                           Json{{"projective", proj.projective},
                                {"wa_unitary", proj.wa_unitary}}});

  report.extra = Json{
      {"sigma_E", rep_to_json(result.sigma_e)},
      {"A", matrix_to_json(result.a_map.a)},
      {"W", matrix_to_json(result.w)},
      {"residuals", Json{{"uno", result.residuals.uno},
                         {"due", result.residuals.due},
                         {"tre", std::abs(result.residuals.tre_rank -
                                          result.residuals.tre_expected)},
                         {"isometry", result.residuals.isometry}}},
      {"projective", proj.projective},
      {"wa_unitary", proj.wa_unitary}};
  return report;
}

Report cmd_torus_fixture(const Options& opt) {
  Report report;
  report.command = "torus-fixture";
  report.inputs = inputs_json(opt, {"n"});
  const TorusFixture fx = torus_fixture(opt.torus_n);

  report.checks.push_back({"e-valid", validate_povm(fx.e, opt.tol).pass, Json::object()});
  report.checks.push_back(
      {"e-prime-valid", validate_povm(fx.e_prime, opt.tol).pass, Json::object()});
  report.checks.push_back(
      {"e-prime-normalized", is_normalized(fx.e_prime, opt.tol), Json::object()});
  report.checks.push_back(
      {"e-prime-non-projective", !is_projective(fx.e_prime, opt.tol), Json::object()});

  const MackeyResult re = extract(fx.e, opt.tol);
  const MackeyResult rp = extract(fx.e_prime, opt.tol);
  report.checks.push_back({"sigma-dims-two",
                           re.sigma_e.dim == 2 && rp.sigma_e.dim == 2,
                           Json{{"dim_e", re.sigma_e.dim}, {"dim_e_prime", rp.sigma_e.dim}}});
  report.checks.push_back(
      {"sigmas-equivalent",
       equivalence_unitary(re.sigma_e, rp.sigma_e, opt.tol).has_value(),
       Json::object()});

  const EquivalenceResult eq = systems_equivalent(fx.e, fx.e_prime, opt.tol);
  const char* verdict = eq.verdict == Equivalence::Equivalent
                            ? "equivalent"
                            : (eq.verdict == Equivalence::Inequivalent ? "none"
                                                                       : "undetermined");
  report.checks.push_back({"systems-not-equivalent",
                           eq.verdict != Equivalence::Equivalent,
                           Json{{"verdict", verdict}}});

  report.extra = Json{
      {"discrepancies",
       Json{{"e_claimed_projective_but_is_not", !fx.e_projective},
            {"printed_orientation_fails_covariance", fx.orientation_flipped},
            {"printed_orientation_residual", fx.printed_orientation_residual},
            {"offdiag_scale", fx.offdiag_scale}}}};
  return report;
}

Report cmd_demo_cwt(const Options& opt) {
  Report report;
  report.command = "demo-cwt";
  report.inputs = inputs_json(opt, {"signal"});
  const TimeGrid tgrid = reference_time_grid();
  const CwtGrid grid = reference_cwt_grid();
  const WaveletSpec psi = reference_wavelet(tgrid);

  SampledSignal u;
  if (opt.signal == "builtin") {
    u = reference_chirp(tgrid);
  } else {
    const Json j = load_json_file(opt.signal);
    u.samples = vector_from_json(j.at("samples"));
    u.dt = j.at("dt").get<double>();
    u.t0 = j.at("t0").get<double>();
  }

  const EnergyReport energy = cwt_energy_report(u, psi, grid);
  const Matrix coeffs = cwt_forward(u, psi, grid);
  const SampledSignal back = cwt_inverse(coeffs, psi, grid, energy.constant);
  const double recon =
      std::sqrt(signal_energy({back.samples - u.samples, u.dt, u.t0}) /
                signal_energy(u));

  report.checks.push_back(
      {"parseval", energy.rel_err <= 0.01, Json{{"rel_err", energy.rel_err}}});
  report.checks.push_back({"reconstruction", recon <= 1e-3, Json{{"rel_l2", recon}}});

  // Admissibility stability under grid doubling.
  const TimeGrid fine{tgrid.n * 2, tgrid.dt / 2.0, tgrid.t0};
  const double c_fine = admissibility_constant(reference_wavelet(fine));
  const double drift = std::abs(c_fine - energy.constant) / energy.constant;
  report.checks.push_back({"constant-stable", drift <= 1e-4, Json{{"rel_change", drift}}});

  report.extra = Json{{"constant", energy.constant},
                      {"energy_lhs", energy.lhs},
                      {"energy_rhs", energy.rhs},
                      {"rel_err", energy.rel_err},
                      {"reconstruction_rel_l2", recon},
                      {"grid_version", grid.version}};
  return report;
}

Report cmd_demo_gabor(const Options& opt) {
  Report report;
  report.command = "demo-gabor";
  report.inputs = inputs_json(opt, {"signal"});
  const TimeGrid tgrid = reference_time_grid();
  const StftGrid grid = reference_stft_grid();
  const SampledSignal g = gaussian_window(tgrid);

  SampledSignal u = g;
  if (opt.signal != "builtin") {
    const Json j = load_json_file(opt.signal);
    u.samples = vector_from_json(j.at("samples"));
    u.dt = j.at("dt").get<double>();
    u.t0 = j.at("t0").get<double>();
  }

  const IsometryReport iso = stft_isometry_check(u, g, grid);
  report.checks.push_back({"moyal-identity", iso.rel_err <= 1e-6,
                           Json{{"rel_err", iso.rel_err}}});
  report.extra = Json{{"lhs", iso.lhs},
                      {"rhs", iso.rhs},
                      {"rel_err", iso.rel_err},
                      {"grid_version", grid.version}};
  return report;
}

Report cmd_verify_all(const Options& opt) {
  Report report;
  report.command = "verify-all";
  report.inputs = Json{{"scope", "catalog order <= 60"}};

  // Regular-representation identity across the catalog sweep.
  std::vector<std::string> sweep;
  for (int n : {1, 2, 3, 4, 6, 8, 12, 20, 30, 60}) sweep.push_back("Z" + std::to_string(n));
  for (int n : {3, 4, 6, 10, 15, 30}) sweep.push_back("D" + std::to_string(n));
  sweep.insert(sweep.end(), {"S3", "S4", "Q8", "Heis2", "Heis3"});
  double worst_reg = 0.0;
  for (const auto& name : sweep) {
    const GroupPtr g = catalog(name);
    const Subgroup e = trivial_subgroup(g);
    const InducedRep ind =
        induce(trivial_rep(e.group), coset_space(g, e), theta_uniform(e));
    const auto u = equivalence_unitary(ind.rep, left_regular(g), opt.tol);
    if (!u) {
      worst_reg = 1.0;
      break;
    }
    for (int a : g->generating_set())
      worst_reg = std::max(
          worst_reg, (*u * ind.rep.at(a) - left_regular(g).at(a) * *u).norm());
  }
  report.checks.push_back({"regular-identity", worst_reg <= opt.tol * 100,
                           Json{{"groups", static_cast<int>(sweep.size())},
                                {"worst_residual", worst_reg}}});

  // Frobenius reciprocity over subgroup class representatives.
  int pairs = 0;
  bool frobenius_ok = true;
  for (const char* name : {"Z6", "S3", "D4", "Q8"}) {
    const GroupPtr g = catalog(name);
    const auto g_irreps = irreducibles(g, opt.seed, opt.tol);
    for (const Subgroup& h : subgroup_class_representatives(g)) {
      const auto h_irreps = irreducibles(h.group, opt.seed, opt.tol);
      for (const auto& sigma : h_irreps) {
        const InducedRep ind =
            induce(sigma, coset_space(g, h), theta_uniform(h));
        for (const auto& pi : g_irreps) {
          ++pairs;
          if (hom_dimension(pi, ind.rep, opt.tol) !=
              hom_dimension(restrict_rep(pi, h), sigma, opt.tol))
            frobenius_ok = false;
        }
      }
    }
  }
  report.checks.push_back({"frobenius-reciprocity", frobenius_ok, Json{{"pairs", pairs}}});

  // Extraction on canonical and seeded random systems.
  double worst_extract = 0.0;
  bool proj_ok = true;
  for (const char* name : {"S3", "D4"}) {
    const GroupPtr g = catalog(name);
    for (const Subgroup& h : subgroup_class_representatives(g)) {
      const auto h_irreps = irreducibles(h.group, opt.seed, opt.tol);
      const InducedRep ind =
          induce(h_irreps.back(), coset_space(g, h), theta_uniform(h));
      const Povm canonical = canonical_povm(ind);
      const MackeyResult rc = extract(canonical, opt.tol);
      worst_extract = std::max({worst_extract, rc.residuals.uno, rc.residuals.due,
                                rc.residuals.isometry});
      proj_ok = proj_ok && projectivity_check(rc, canonical, opt.tol).consistent();
      for (std::uint64_t k = 0; k < 3; ++k) {
        const Povm e = random_covariant_povm(ind, opt.seed + k, opt.tol).povm;
        const MackeyResult rr = extract(e, opt.tol);
        worst_extract = std::max({worst_extract, rr.residuals.uno, rr.residuals.due,
                                  rr.residuals.isometry});
        proj_ok = proj_ok && projectivity_check(rr, e, opt.tol).consistent();
      }
    }
  }
  report.checks.push_back({"mackey-extraction", worst_extract <= opt.tol * 100,
                           Json{{"worst_residual", worst_extract}}});
  report.checks.push_back({"projectivity-consistency", proj_ok, Json::object()});

  // Torus fixture and the numeric demos.
  Options sub = opt;
  const Report torus = cmd_torus_fixture(sub);
  report.checks.push_back({"torus-fixture", torus.pass(), Json::object()});
  const Report cwt = cmd_demo_cwt(sub);
  report.checks.push_back({"demo-cwt", cwt.pass(), cwt.extra});
  const Report gabor = cmd_demo_gabor(sub);
  report.checks.push_back({"demo-gabor", gabor.pass(), gabor.extra});
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced representations, covariant observables and frames on finite groups"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env_tol = std::getenv("REPO_TOL")) opt.tol = std::atof(env_tol);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--group", opt.group, "catalog name or group JSON file");
    cmd->add_option("--subgroup", opt.subgroup,
                    "trivial|full|center|A<n>|gen:i,j|file");
    cmd->add_option("--sigma", opt.sigma, "irrep:<k>|trivial|regular|file");
    cmd->add_option("--pi", opt.pi, "induced|irrep:<k>|trivial|regular|file");
    cmd->add_option("--povm", opt.povm, "canonical|compress:<k>|file");
    cmd->add_option("--theta", opt.theta, "uniform|random");
    cmd->add_option("--admissible", opt.admissible, "admissible map JSON file");
    cmd->add_option("--signal", opt.signal, "builtin|signal JSON file");
    cmd->add_option("--seed", opt.seed, "PRNG seed");
    cmd->add_option("--tol", opt.tol, "numerical tolerance");
    cmd->add_option("--n", opt.torus_n, "torus discretization order");
    cmd->add_option("--output", opt.output, "report path, - for stdout");
    cmd->add_option("--format", opt.format, "json|text");
  };

  std::vector<std::pair<std::string, Report (*)(const Options&)>> commands = {
      {"list-groups", cmd_list_groups},   {"induce", cmd_induce},
      {"frobenius-check", cmd_frobenius}, {"frame-analyze", cmd_frame_analyze},
      {"tighten", cmd_tighten},           {"mackey-extract", cmd_mackey_extract},
      {"verify-all", cmd_verify_all},     {"torus-fixture", cmd_torus_fixture},
      {"demo-cwt", cmd_demo_cwt},         {"demo-gabor", cmd_demo_gabor}};
  for (auto& [name, fn] : commands) add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    for (auto& [name, fn] : commands) {
      if (!app.get_subcommand(name)->parsed()) continue;
      Report report = fn(opt);
      report.seed = opt.seed;
      report.tolerance = opt.tol;
      const double wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                    started)
              .count();
      save_report(report, opt.output, opt.format, wall_ms);
      if (opt.format == "json" && opt.output != "-" && opt.output != "")
        std::cerr << report.to_text(wall_ms);
      return report.pass() ? 0 : 1;
    }
    std::cerr << "UnknownCommand: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    const Json body{{"error", e.kind()}, {"message", e.what()}};
    std::cout << canonical_dump(body);
    const bool internal = e.kind() == "ExtractionInconsistent" || e.kind() == "SplitFailed";
    return internal ? 1 : 2;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "Internal"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  }
}
