// sjt: evaluate theta series, run verification suites and extract Fourier
// coefficients from a key = value job file. See README.md for the grammar
// and the report schema.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_parse.hpp"
#include "sjt/jacobi_forms.hpp"
#include "sjt/quadrature.hpp"
#include "sjt/random.hpp"

namespace sjt::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0, kExitCheck = 1, kExitParse = 2, kExitResource = 3;

const std::vector<std::string> kTasks = {"theta-eval",   "theta-verify",  "covariance-verify",
                                         "rep-check",    "gaussian-integral-check",
                                         "poisson-check", "qexpansion",   "fourier-extract"};

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(to_json(a(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const RMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(a(i, j));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const ThetaEvaluation& e) {
  return {{"radius", e.truncationRadius},
          {"terms", e.termCount},
          {"tail_bound", e.tailBound},
          {"eps_requested", e.epsilonRequested},
          {"dominant_scale", e.dominantScale}};
}

json to_json(const SiegelJacobiPoint& p) { return {{"omega", to_json(p.Omega().matrix())}, {"Z", to_json(p.Z())}}; }

/// Accumulates the report body for one job.
class Report {
 public:
  explicit Report(std::string task) { body_["schema"] = "report-v1"; body_["task"] = std::move(task); }

  json& inputs() { return body_["inputs"]; }
  json& outputs() { return body_["outputs"]; }
  json& certificates() { return body_["certificates"]; }

  void check(const std::string& name, double value, double tolerance, bool pass) {
    checks_.push_back({{"name", name}, {"value", value}, {"tolerance", tolerance}, {"pass", pass}});
    pass_ = pass_ && pass;
  }
  bool pass() const { return pass_; }

  json body() const {
    json b = body_;
    b["checks"] = checks_;
    b["pass"] = pass_;
    return b;
  }

 private:
  json body_ = json::object();
  json checks_ = json::array();
  bool pass_ = true;
};

class Job {
 public:
  Job(Config cfg, std::string task, double eps, std::uint64_t seed)
      : cfg_(std::move(cfg)), task_(std::move(task)), eps_(eps), seed_(seed), rng_(seed) {}

  const std::string& task() const { return task_; }
  double eps() const { return eps_; }
  std::uint64_t seed() const { return seed_; }
  rnd::Rng& rng() { return rng_; }

  bool has(const std::string& key) const { return cfg_.count(key) > 0; }
  std::string str(const std::string& key) const { return cfg_.at(key).value; }

  long integer(const std::string& key, long fallback) const {
    if (!has(key)) return fallback;
    const double v = parse_real_matrix(str(key))(0, 0);
    if (v != std::floor(v)) throw ParseError(key + " must be an integer");
    return static_cast<long>(v);
  }
  double real(const std::string& key, double fallback) const {
    return has(key) ? parse_real_matrix(str(key))(0, 0) : fallback;
  }

  IndexMatrix index() const {
    if (!has("M")) throw ParseError("missing key 'M'");
    return parse_index(str("M"));
  }

  /// The configured point, or a random one when 'omega' is absent.
  SiegelJacobiPoint point(std::size_t m, const rnd::PointOptions& opt = {}) {
    if (!has("omega")) {
      const auto n = static_cast<std::size_t>(integer("n", 1));
      return rnd::point(rng_, n, m, opt);
    }
    const CMatrix omega = parse_matrix(str("omega"));
    CMatrix Z = has("Z") ? parse_matrix(str("Z")) : CMatrix(m, omega.rows());
    // a scalar 0 stands for the zero matrix of any shape
    if (Z.rows() == 1 && Z.cols() == 1 && Z(0, 0) == cplx(0.0)) Z = CMatrix(m, omega.rows());
    if (Z.rows() != m || Z.cols() != omega.rows())
      throw ParseError("Z must be " + std::to_string(m) + " x " + std::to_string(omega.rows()));
    return {ComplexSymMatrix(omega), Z};
  }

  bool explicit_point() const { return has("omega"); }
  std::size_t trials() const { return explicit_point() ? 1 : static_cast<std::size_t>(integer("trials", 10)); }

  void echo(Report& r) const {
    json in = json::object();
    for (const auto& [k, v] : cfg_) in[k] = v.value;
    in["task"] = task_;
    in["eps"] = eps_;
    in["seed"] = seed_;
    r.inputs() = in;
  }

 private:
  Config cfg_;
  std::string task_;
  double eps_;
  std::uint64_t seed_;
  rnd::Rng rng_;
};

// ---------------------------------------------------------------------------
// tasks

void theta_eval_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const auto p = job.point(M.m());
  const auto e = theta_eval(M, p, job.eps());
  r.outputs() = {{"point", to_json(p)}, {"value", to_json(e.value)}};
  r.certificates() = {{"theta", to_json(e)}};
}

void theta_verify_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const auto p = job.point(M.m(), {0.5, 0.3, 1.0, 0.2});
  // random words stay where Im Omega >= min_imag so every theta sum fits the term cap
  const auto flavor = M.even() ? rnd::WordFlavor::Integral : rnd::WordFlavor::Gamma12;
  const Word w = job.has("word") ? parse_word(job.str("word"))
                                 : rnd::feasible_word(job.rng(), static_cast<std::size_t>(job.integer("length", 3)),
                                                      p, flavor, job.real("min_imag", 0.7));
  const auto rep = verify_theta_transformation(M, w, p, job.eps());
  json steps = json::array();
  for (const auto& s : rep.steps)
    steps.push_back({{"generator", s.gen.to_string()}, {"J", to_json(s.J)}, {"rho", to_json(s.rho)}});
  r.outputs() = {{"word", word_to_string(w)},
                 {"point", to_json(p)},
                 {"theta_lhs", to_json(rep.lhs)},
                 {"theta_p", to_json(rep.thetaP)},
                 {"J_word", to_json(rep.jWord)},
                 {"J_chain", to_json(rep.jChain)},
                 {"rho_predicted", to_json(rep.rhoPredicted)},
                 {"rho_measured", to_json(rep.rhoMeasured)},
                 {"cocycle_defect", rep.cocycleDefect},
                 {"chained_residual", rep.chainedResidual},
                 {"literal_residual", rep.literalResidual},
                 {"rho_eighth_defect", rep.rhoEighthDefect},
                 {"strict", rep.strict},
                 {"steps", steps}};
  r.certificates() = {{"lhs", to_json(rep.lhsEval)},
                      {"rhs", to_json(rep.rhsEval)},
                      {"truncation_error", rep.truncationError}};
  if (rep.strict) {
    r.check("chained_residual", rep.chainedResidual, kThetaTransformTol, rep.chainedResidual <= kThetaTransformTol);
    r.check("rho_eighth_defect", rep.rhoEighthDefect, kThetaTransformTol, rep.rhoEighthDefect <= kThetaTransformTol);
  }
}

void covariance_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const auto length = static_cast<std::size_t>(job.integer("length", 3));
  json trials = json::array();
  for (std::size_t t = 0; t < job.trials(); ++t) {
    const auto p = job.point(M.m());
    const Word w = job.has("word") ? parse_word(job.str("word"))
                                   : rnd::word(job.rng(), length, p.n(), M.m(), rnd::WordFlavor::Real);
    const auto rep = verify_covariance(M, w, p);
    trials.push_back({{"word", word_to_string(w)},
                      {"point", to_json(p)},
                      {"max_rel_error", rep.maxRelError},
                      {"form_error", rep.diff.formError()},
                      {"scalar", to_json(rep.scalar)},
                      {"scalar_eighth_defect", rep.scalarEighthDefect}});
    if (rep.singleGenerator)
      r.check("covariance[" + std::to_string(t) + "]", rep.maxRelError, kCovarianceTol, rep.pass);
    else
      r.check("covariance[" + std::to_string(t) + "]", rep.scalarEighthDefect, kScalarTol, rep.pass);
  }
  r.outputs() = {{"trials", trials}};
}

GridFunction bump_function(rnd::Rng& rng, const GridSpec& g) {
  GridFunction f(g);
  for (int b = 0; b < 3; ++b) {
    const RMatrix c = rnd::matrix(rng, g.m(), g.n(), 1.0);
    const cplx w(rnd::uniform(rng, -1, 1), rnd::uniform(rng, -1, 1));
    for (std::size_t k = 0; k < g.size(); ++k) {
      const RMatrix x = g.point(k) - c;
      double r2 = 0.0;
      for (double v : x.data()) r2 += v * v;
      f.values()[k] += w * std::exp(-2.0 * r2);
    }
  }
  return f;
}

HeisenbergElement grid_element(rnd::Rng& rng, const GridSpec& g) {
  RMatrix lambda(g.m(), g.n());
  const long steps = std::max(1L, std::lround(1.0 / g.delta()));
  for (auto& v : lambda.data()) v = static_cast<double>(rnd::integer(rng, -steps, steps)) * g.delta();
  RMatrix mu = rnd::matrix(rng, g.m(), g.n(), 1.0);
  RMatrix kappa = rnd::symmetric(rng, g.m(), 1.0).matrix() - mu * lambda.transpose();
  return {std::move(lambda), std::move(mu), std::move(kappa)};
}

void rep_check_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const auto n = static_cast<std::size_t>(job.integer("n", 1));
  const GridSpec g(M.m(), n, job.real("L", 8.0), job.real("delta", 1.0 / 16.0));
  const CentralCharacter c(M.entries());
  const auto trials = static_cast<std::size_t>(job.integer("trials", 10));
  double worstHom = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto f = bump_function(job.rng(), g);
    const auto h1 = grid_element(job.rng(), g), h2 = grid_element(job.rng(), g);
    const auto lhs = schrodinger_apply(c, heisenberg_mul(h1, h2), f);
    const auto rhs = schrodinger_apply(c, h1, schrodinger_apply(c, h2, f));
    worstHom = std::max(worstHom, (lhs - rhs).norm() / f.norm());
  }
  r.check("homomorphism", worstHom, 1e-10, worstHom <= 1e-10);
  json out = {{"grid", {{"L", g.L()}, {"delta", g.delta()}, {"points_per_axis", g.points_per_axis()}}},
              {"homomorphism_max_rel_error", worstHom}};
  if (M.m() == 1 && n == 1 && M.positiveDefinite()) {
    double worst = 0.0, boundary = 0.0;
    const bool sigmaOk = 2.0 * M.matrix()(0, 0) * g.L() * g.delta() <= 1.0 + 1e-12;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto p = rnd::point(job.rng(), 1, 1, {1.0, 0.2, 0.9, 0.3});
      const GaussianVector v(1.0, p.Omega(), p.Z(), M);
      const auto f = sample(v, g);
      boundary = std::max(boundary, f.boundaryRatio);
      auto err = [&](const GridFunction& numeric, const GaussianVector& exact) {
        const auto s = sample(exact, g);
        boundary = std::max(boundary, s.boundaryRatio);
        worst = std::max(worst, (numeric - s.values).norm() / s.values.norm());
      };
      const RealSymMatrix b = rnd::symmetric(job.rng(), 1, 1.0);
      err(numeric_tb(M, b, f.values), act_tb(b, v));
      const RMatrix a{{rnd::uniform(job.rng(), 0.8, 1.25)}};
      err(numeric_galpha(a, f.values), act_galpha(a, v));
      if (sigmaOk) err(numeric_sigma(M, f.values), act_sigma(v));
      const HeisenbergElement h(RMatrix{{static_cast<double>(rnd::integer(job.rng(), -8, 8)) * g.delta()}},
                                RMatrix{{rnd::uniform(job.rng(), -1, 1)}}, RMatrix{{rnd::uniform(job.rng(), -1, 1)}});
      err(numeric_heisenberg(1.0, M, h, f.values), act_heisenberg(1.0, h, v));
    }
    out["grid_symbolic_max_rel_error"] = worst;
    out["sigma_checked"] = sigmaOk;
    r.certificates() = {{"max_boundary_ratio", boundary}};
    r.check("grid_symbolic", worst, 1e-8, worst <= 1e-8);
  }
  r.outputs() = out;
}

void gaussian_integral_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  json trials = json::array();
  for (std::size_t t = 0; t < job.trials(); ++t) {
    const auto p = job.point(M.m(), {1.0, 0.3, 0.7, 0.4});
    const cplx exact = gaussian_integral(M, p.Omega(), p.Z());
    const auto q = quadrature_gaussian(M, p.Omega(), p.Z(), 1e-12 * std::abs(exact));
    const double rel = std::abs(q.value - exact) / std::abs(exact);
    trials.push_back({{"point", to_json(p)},
                      {"closed_form", to_json(exact)},
                      {"quadrature", to_json(q.value)},
                      {"quadrature_error_estimate", q.errorEstimate},
                      {"rel_error", rel}});
    r.check("gaussian_integral[" + std::to_string(t) + "]", rel, 1e-8, rel <= 1e-8);
  }
  r.outputs() = {{"trials", trials}};
}

void poisson_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const cplx c0 = job.has("prefactor") ? parse_complex(job.str("prefactor")) : cplx(1.0);
  json trials = json::array();
  for (std::size_t t = 0; t < job.trials(); ++t) {
    const auto p = job.point(M.m(), {1.0, 0.3, 0.6, 0.3});
    const auto rep = poisson_check(GaussianVector(c0, p.Omega(), p.Z(), M), std::min(job.eps(), 1e-15));
    trials.push_back({{"point", to_json(p)},
                      {"lhs", to_json(rep.lhs)},
                      {"rhs", to_json(rep.rhs)},
                      {"rel_error", rep.relError},
                      {"lhs_certificate", to_json(rep.lhsEval)},
                      {"rhs_certificate", to_json(rep.rhsEval)}});
    r.check("poisson[" + std::to_string(t) + "]", rep.relError, 1e-9, rep.relError <= 1e-9);
  }
  r.outputs() = {{"trials", trials}};
}

void qexpansion_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const long order = job.integer("max_order", 4);
  const auto coeffs = qexpansion(M, 1, order);
  json c = json::array();
  for (const auto& q : coeffs) c.push_back(q.count);
  json checks = json::array();
  if (job.has("check_omega")) {
    const CMatrix pts = parse_matrix(job.str("check_omega"));
    for (const auto& w : pts.data()) {
      const SiegelJacobiPoint p(ComplexSymMatrix{{w}}, CMatrix(M.m(), 1));
      const auto e = theta_eval(M, p, job.eps());
      const cplx s = qseries_sum(coeffs, w);
      const double diff = std::abs(s - e.value);
      checks.push_back({{"omega", to_json(w)}, {"series", to_json(s)}, {"theta", to_json(e.value)},
                        {"abs_diff", diff}, {"theta_certificate", to_json(e)}});
      r.check("series_vs_theta", diff, 1e-9, diff <= 1e-9);
    }
  }
  r.outputs() = {{"coefficients", c}, {"comparisons", checks}};
}

void fourier_task(Job& job, Report& r) {
  const IndexMatrix M = job.index();
  const auto params = theta_slash_parameters(M);
  FourierOptions opt;
  opt.samples = static_cast<std::size_t>(job.integer("samples", 32));
  opt.imOmega = job.real("im_omega", 0.25);
  opt.imZ = job.real("im_z", 0.0);
  opt.lambdaGamma = static_cast<int>(job.integer("lambda", 1));
  opt.tolerance = job.real("alias_tolerance", 1e-8);
  const long Tmax = job.integer("T_max", 4), Rmax = job.integer("R_max", 4);
  std::vector<FourierIndex> box;
  const std::size_t m = M.m();
  std::vector<long> R(m, -Rmax);
  for (long T = 0; T <= Tmax; ++T) {
    std::fill(R.begin(), R.end(), -Rmax);
    while (true) {
      RMatrix Rm(1, m);
      for (std::size_t a = 0; a < m; ++a) Rm(0, a) = static_cast<double>(R[a]);
      box.push_back({RealSymMatrix{{static_cast<double>(T)}}, Rm, opt.lambdaGamma});
      std::size_t a = 0;
      while (a < m && ++R[a] > Rmax) R[a++] = -Rmax;
      if (a == m) break;
    }
  }
  CMatrix Zh(m, 1, cplx(0.0, opt.imZ));
  const auto theta = theta_function(M, ComplexSymMatrix{{cplx(0.0, opt.imOmega)}}, Zh, 1e-14);
  const auto coeffs = fourier_coefficients(theta, 1, m, params, box, opt);
  json nonzero = json::array();
  double worstAlias = 0.0;
  bool blockOk = true;
  for (const auto& c : coeffs) {
    worstAlias = std::max(worstAlias, c.aliasEstimate);
    if (std::abs(c.value) < 1e-6) continue;
    const bool semi = block_positivity(c.index.T, c.index.R, params.index, opt.lambdaGamma, BlockMode::Semi);
    const bool sing = block_positivity(c.index.T, c.index.R, params.index, opt.lambdaGamma, BlockMode::Singular);
    blockOk = blockOk && semi && sing;
    nonzero.push_back({{"T", c.index.T(0, 0)},
                       {"R", to_json(c.index.R)},
                       {"value", to_json(c.value)},
                       {"alias_estimate", c.aliasEstimate},
                       {"block_semi", semi},
                       {"block_singular", sing}});
  }
  r.outputs() = {{"box", {{"T_max", Tmax}, {"R_max", Rmax}}}, {"nonzero", nonzero}};
  r.certificates() = {{"max_alias_estimate", worstAlias}, {"samples", opt.samples}};
  r.check("block_conditions", blockOk ? 0.0 : 1.0, 0.0, blockOk);
}

void dispatch(Job& job, Report& r) {
  const auto& t = job.task();
  if (t == "theta-eval") return theta_eval_task(job, r);
  if (t == "theta-verify") return theta_verify_task(job, r);
  if (t == "covariance-verify") return covariance_task(job, r);
  if (t == "rep-check") return rep_check_task(job, r);
  if (t == "gaussian-integral-check") return gaussian_integral_task(job, r);
  if (t == "poisson-check") return poisson_task(job, r);
  if (t == "qexpansion") return qexpansion_task(job, r);
  if (t == "fourier-extract") return fourier_task(job, r);
  throw ParseError("unknown task '" + t + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void summarize(const json& body, int status, double seconds) {
  std::cout << "task: " << body.value("task", std::string("?")) << "\n";
  if (body.contains("checks"))
    for (const auto& c : body["checks"])
      std::cout << "  " << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                << "  value=" << c["value"].dump() << "  tol=" << c["tolerance"].dump() << "\n";
  if (body.contains("outputs") && body["outputs"].contains("value"))
    std::cout << "  value = " << body["outputs"]["value"].dump() << "\n";
  std::cout << "status: " << status << "  wall time: " << seconds << " s\n";
}

}  // namespace
}  // namespace sjt::cli

int main(int argc, char** argv) {
  using namespace sjt;
  using namespace sjt::cli;
  CLI::App app{"Siegel-Jacobi theta and Weil representation toolkit"};
  std::string configPath, task, out;
  std::optional<double> eps;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  app.add_option("--config", configPath, "job file (key = value lines)");
  app.add_option("--task", task, "task name, overrides the config")->check(CLI::IsMember(kTasks));
  app.add_option("--eps", eps, "truncation accuracy")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for random inputs");
  app.add_option("--out", out, "report path (JSON)");
  app.add_option("--threads", threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  json body;
  try {
    Config cfg = configPath.empty() ? Config{} : parse_config(read_file(configPath));
    if (task.empty()) {
      if (!cfg.count("task")) throw ParseError("no task given (--task or 'task =' in the config)");
      task = trim(cfg.at("task").value);
    }
    cfg.erase("task");
    if (!eps) eps = cfg.count("eps") ? parse_real_matrix(cfg.at("eps").value)(0, 0) : 1e-12;
    if (!(*eps > 0.0)) throw ParseError("eps must be positive");
    if (!seed) seed = cfg.count("seed") ? static_cast<std::uint64_t>(std::stoull(cfg.at("seed").value)) : 1u;
    if (out.empty() && cfg.count("output")) out = cfg.at("output").value;
    cfg.erase("eps");
    cfg.erase("seed");
    cfg.erase("output");
    kernels::set_threads(threads);

    Job job(std::move(cfg), task, *eps, *seed);
    Report report(task);
    job.echo(report);
    dispatch(job, report);
    body = report.body();
    status = report.pass() ? kExitOk : kExitCheck;
  } catch (const ResourceError& e) {
    status = kExitResource;
    body = {{"schema", "report-v1"}, {"task", task}, {"error", e.what()}, {"partial_bound", e.partialBound()}};
  } catch (const std::exception& e) {
    // parse errors and inputs that violate a domain or shape precondition
    status = kExitParse;
    body = {{"schema", "report-v1"}, {"task", task}, {"error", e.what()}};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json report = {{"body", body},
                 {"meta", {{"wall_time_s", seconds}, {"threads", kernels::max_threads()}, {"exit_status", status}}}};
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write report to '" << out << "'\n";
      return kExitParse;
    }
    f << report.dump(2) << "\n";
  }
  if (body.contains("error")) std::cerr << "error: " << body["error"].get<std::string>() << "\n";
  summarize(body, status, seconds);
  return status;
}
