#include <gtest/gtest.h>
#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_parse.hpp"

using namespace sjt;
using namespace sjt::cli;
using nlohmann::json;

TEST(CliParse, Complex) {
  EXPECT_EQ(parse_complex("1"), cplx(1, 0));
  EXPECT_EQ(parse_complex("-2.5"), cplx(-2.5, 0));
  EXPECT_EQ(parse_complex("i"), cplx(0, 1));
  EXPECT_EQ(parse_complex("-i"), cplx(0, -1));
  EXPECT_EQ(parse_complex("2i"), cplx(0, 2));
  EXPECT_EQ(parse_complex("1+2i"), cplx(1, 2));
  EXPECT_EQ(parse_complex("0.5-1e-3i"), cplx(0.5, -1e-3));
  EXPECT_EQ(parse_complex("1e-2+i"), cplx(1e-2, 1));
  EXPECT_EQ(parse_complex(" 3 - 4i "), cplx(3, -4));
  EXPECT_THROW(parse_complex(""), ParseError);
  EXPECT_THROW(parse_complex("1+2j"), ParseError);
  EXPECT_THROW(parse_complex("abc"), ParseError);
}

TEST(CliParse, Matrix) {
  const CMatrix a = parse_matrix("[1, 2i; -i, 4]");
  ASSERT_EQ(a.rows(), 2u);
  ASSERT_EQ(a.cols(), 2u);
  EXPECT_EQ(a(0, 1), cplx(0, 2));
  EXPECT_EQ(a(1, 0), cplx(0, -1));
  const CMatrix s = parse_matrix("0.3+0.4i");
  EXPECT_EQ(s.rows(), 1u);
  EXPECT_EQ(s(0, 0), cplx(0.3, 0.4));
  EXPECT_THROW(parse_matrix("[1, 2; 3]"), ParseError);
  EXPECT_THROW(parse_matrix("[1, 2"), ParseError);
  EXPECT_THROW(parse_real_matrix("[1, i]"), ParseError);
}

TEST(CliParse, Index) {
  EXPECT_EQ(parse_index("E8").m(), 8u);
  EXPECT_EQ(parse_index("[2, 1; 1, 2]").m(), 2u);
  EXPECT_THROW(parse_index("[1, 2, 3]"), ParseError);
  EXPECT_ANY_THROW(parse_index("[1, 2; 3, 4]"));  // not symmetric
}

TEST(CliParse, Word) {
  const Word w = parse_word("[t([2]), sigma, g([-1]), h([1];[0.5];[0])]");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0].kind, GeneratorKind::Translation);
  EXPECT_EQ(w[1].kind, GeneratorKind::Sigma);
  EXPECT_EQ(w[2].kind, GeneratorKind::Scaling);
  EXPECT_EQ(w[3].kind, GeneratorKind::Heisenberg);
  EXPECT_EQ(word_to_string(parse_word("t([2]), sigma")), "[t([2]), sigma]");
  EXPECT_TRUE(parse_word("[]").empty());
  EXPECT_THROW(parse_word("[tau([1])]"), ParseError);
  EXPECT_THROW(parse_word("[h([1];[0])]"), ParseError);
  EXPECT_THROW(parse_word("[t([1]]"), ParseError);
}

TEST(CliParse, Config) {
  const Config c = parse_config("# job\ntask = theta-eval\n\nM = [2]   # index\nomega = i\n");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.at("M").value, "[2]");
  EXPECT_EQ(c.at("omega").line, 5);
  EXPECT_THROW(parse_config("M = [1]\nM = [2]\n"), ParseError);
  EXPECT_THROW(parse_config("M [1]\n"), ParseError);
  EXPECT_THROW(parse_config("M =\n"), ParseError);
  EXPECT_THROW(parse_config("a b = 1\n"), ParseError);
}

namespace {

struct Run {
  int status = -1;
  json report;
};

Run run_cli(const std::string& name, const std::string& config, const std::string& flags = "") {
  const std::filesystem::path dir = SJT_CLI_SCRATCH;
  std::filesystem::create_directories(dir);
  const auto cfg = dir / (name + ".cfg");
  const auto out = dir / (name + ".json");
  std::filesystem::remove(out);
  std::ofstream(cfg) << config;
  const std::string cmd = std::string("\"") + SJT_CLI + "\" --config \"" + cfg.string() + "\" --out \"" +
                          out.string() + "\" " + flags + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  if (in) {
    std::stringstream s;
    s << in.rdbuf();
    r.report = json::parse(s.str());
  }
  return r;
}

cplx as_complex(const json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

}  // namespace

TEST(CliRun, ThetaEvalScalar) {
  const auto r = run_cli("theta_eval", "task = theta-eval\nM = [2]\nomega = i\nZ = 0\neps = 1e-10\n");
  ASSERT_EQ(r.status, 0);
  const auto& body = r.report["body"];
  EXPECT_EQ(body["schema"], "report-v1");
  EXPECT_NEAR(as_complex(body["outputs"]["value"]).real(), 1.0037348854877, 1e-10);
  EXPECT_TRUE(body["certificates"]["theta"].contains("tail_bound"));
  EXPECT_EQ(r.report["meta"]["exit_status"], 0);
}

TEST(CliRun, ThetaVerifySigmaE8) {
  const auto r = run_cli("theta_verify", "task = theta-verify\nM = E8\nword = [sigma]\nomega = i\nZ = 0\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.report["body"]["pass"].get<bool>());
  EXPECT_FALSE(r.report["body"]["checks"].empty());
}

TEST(CliRun, CovarianceTranslation) {
  const auto r = run_cli("covariance_t", "task = covariance-verify\nM = [2, 1; 1, 3]\nword = [t([0.7])]\n"
                                         "omega = 0.2+1.1i\nZ = [0.1+0.3i; -0.4+0.2i]\n");
  ASSERT_EQ(r.status, 0);
  for (const auto& c : r.report["body"]["checks"]) EXPECT_LE(c["value"].get<double>(), 1e-12);
}

TEST(CliRun, TaskFlagOverridesConfig) {
  const auto r = run_cli("override", "task = rep-check\nM = [2]\nomega = i\n", "--task theta-eval");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.report["body"]["task"], "theta-eval");
}

TEST(CliRun, ParseErrorsExitTwo) {
  EXPECT_EQ(run_cli("missing_m", "task = theta-eval\nomega = i\n").status, 2);
  EXPECT_EQ(run_cli("bad_literal", "task = theta-eval\nM = [2, \nomega = i\n").status, 2);
  EXPECT_EQ(run_cli("bad_shape", "task = theta-eval\nM = [2]\nomega = i\nZ = [1; 2]\n").status, 2);
  EXPECT_EQ(run_cli("no_task", "M = [2]\n").status, 2);
  EXPECT_EQ(run_cli("non_pd", "task = theta-eval\nM = [-1]\nomega = i\n").status, 2);
  EXPECT_EQ(run_cli("bad_eps", "task = theta-eval\nM = [2]\nomega = i\neps = -1\n").status, 2);
}

TEST(CliRun, ResourceCapExitsThree) {
  const auto r = run_cli("cap", "task = qexpansion\nM = E8\nmax_order = 40\n");
  EXPECT_EQ(r.status, 3);
  EXPECT_TRUE(r.report["body"].contains("partial_bound"));
}

TEST(CliRun, FailedCheckExitsOne) {
  // the series is cut off too early to reach 1e-9 at Im omega = 0.8
  const auto r = run_cli("short_series", "task = qexpansion\nM = E8\nmax_order = 2\ncheck_omega = [0.5+0.8i]\n");
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.report["body"]["pass"].get<bool>());
}

TEST(CliRun, SeededBodiesAreIdentical) {
  const std::string cfg = "task = covariance-verify\nM = [2, 1; 1, 3]\nn = 2\ntrials = 4\nlength = 6\nseed = 7\n";
  const auto a = run_cli("det_a", cfg);
  const auto b = run_cli("det_b", cfg, "--threads 2");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.report["body"].dump(), b.report["body"].dump());
  const auto c = run_cli("det_c", cfg, "--seed 8");
  EXPECT_NE(a.report["body"]["outputs"].dump(), c.report["body"]["outputs"].dump());
}
