#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "vfm/errors.hpp"
#include "vfm/report.hpp"
#include "vfm/scenario.hpp"

using namespace vfm;

namespace {

std::string scenario_path(const std::string& name) { return std::string(VFM_SCENARIO_DIR) + "/" + name + ".txt"; }

Scenario bundled(const std::string& name) { return load_scenario(scenario_path(name)); }

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    parse_scenario(text);
    ADD_FAILURE() << "expected ParseError for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(VFM_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Scenario, ParsesProjective) {
  const Scenario s = parse_scenario(
      "# comment\n"
      "name demo\n"
      "ambient P2\n"
      "field a = z1 d1;   # trailing comment\n"
      "field b = z2 d2\n"
      "lattice (i, 0), (0, 1/2 i)\n"
      "seed 9\n"
      "probe.h 2e-4\n"
      "probe.depth 30\n");
  EXPECT_EQ(s.name, "demo");
  EXPECT_TRUE(s.projective);
  EXPECT_EQ(s.n, 2);
  EXPECT_EQ(s.field_names, (std::vector<std::string>{"a", "b"}));
  ASSERT_TRUE(s.lattice);
  EXPECT_EQ(s.lattice->generators.size(), 2u);
  EXPECT_EQ(s.lattice->generators[1][1], ExactScalar(mpq_class(0), mpq_class(1, 2)));
  EXPECT_EQ(s.probe.seed, 9u);
  EXPECT_DOUBLE_EQ(s.probe.h, 2e-4);
  EXPECT_EQ(s.probe.depth, 30);
}

TEST(Scenario, ParsesAffineWithVars) {
  const Scenario s = parse_scenario("ambient C2\nvars x y\nfield s1 = dx;\nfield s2 = x^2 dy;\n");
  EXPECT_FALSE(s.projective);
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.field_text(1), "x^2*dy");
  EXPECT_FALSE(s.lattice);
}

TEST(Scenario, EmptyLatticeLineIsTrivialLattice) {
  const Scenario s = parse_scenario("ambient P1\nfield a = z1 d1\nlattice\n");
  ASSERT_TRUE(s.lattice);
  EXPECT_TRUE(s.lattice->generators.empty());
}

TEST(Scenario, SeedPrecedence) {
  EXPECT_EQ(parse_scenario("ambient P1\nfield a = z1 d1\n").probe.seed, 42u);
  EXPECT_EQ(parse_scenario("ambient P1\nfield a = z1 d1\n", 5).probe.seed, 5u);
  EXPECT_EQ(parse_scenario("ambient P1\nfield a = z1 d1\nseed 8\n", 5).probe.seed, 8u);
}

TEST(Scenario, ErrorsCarryLineAndColumn) {
  expect_parse_error("field a = z1 d1\n", 1, 1);                          // no ambient yet
  expect_parse_error("ambient P2\nfield a = z1 d1;\n", 1, 1);             // too few fields
  expect_parse_error("ambient Q2\n", 1, 9);                               // bad ambient
  expect_parse_error("ambient P1\nfield a = z1 d7\n", 2, 14);             // unknown derivative
  expect_parse_error("ambient P1\nfield a = z1^2 d1\n", 2, 10);           // not linear
  expect_parse_error("ambient P1\nfield a = z1 d1\nfield a = z0 d1\n", 3, 7);
  expect_parse_error("ambient P1\nfield a = z1 d1\nlattice (1, 2)\n", 3, 9);
  expect_parse_error("ambient P1\nfield a = z1 d1\nlattice (0)\n", 3, 9);
  expect_parse_error("ambient P1\nfield a = z1 d1\nprobe.h -1\n", 3, 11);
  expect_parse_error("ambient P1\nfield a = z1 d1\nprobe.depth 3\n", 3, 13);
  expect_parse_error("ambient P1\nfield a = z1 d1\ncolour red\n", 3, 1);
  expect_parse_error("ambient C2\nvars x\n", 2, 1);
  expect_parse_error("ambient C1\nfield a = dx\n", 2, 11);               // x undeclared
  expect_parse_error("ambient P1\nfield a = z1 d1; extra\n", 2, 18);
}

TEST(Report, P2Toric) {
  const Json r = analyze_report(bundled("p2_toric"));
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["divisor"]["section"], "z0*z1*z2");
  EXPECT_EQ(r["divisor"]["reduced"], true);
  EXPECT_EQ(r["divisor"]["degree"], 3);
  EXPECT_EQ(r["algebra"]["abelian"], true);
  EXPECT_TRUE(r["algebra"]["abelian_witness"].is_null());
  EXPECT_EQ(r["kahler"]["kahler"], true);
  EXPECT_EQ(r["ricci"]["ricci_flat"], true);
  EXPECT_EQ(r["completeness"]["verdict"], "complete");
  EXPECT_EQ(r["completeness"]["agree"], true);
  EXPECT_EQ(r["flow"]["invariant"], true);
  EXPECT_EQ(r["cone"]["semi_torus"], true);
  EXPECT_EQ(r["cone"]["cone_dim"], 1);
}

TEST(Report, P2Nilpotent) {
  const Json r = analyze_report(bundled("p2_nilpotent"));
  EXPECT_EQ(r["divisor"]["section"], "z2^3");
  ASSERT_EQ(r["divisor"]["factors"].size(), 1u);
  EXPECT_EQ(r["divisor"]["factors"][0]["poly"], "z2");
  EXPECT_EQ(r["divisor"]["factors"][0]["mult"], 3);
  EXPECT_EQ(r["divisor"]["reduced"], false);
  EXPECT_EQ(r["algebra"]["abelian"], true);
  EXPECT_EQ(r["kahler"]["kahler"], true);
  EXPECT_EQ(r["completeness"]["verdict"], "complete");
  EXPECT_EQ(r["completeness"]["agree"], true);
  EXPECT_EQ(r["cone"]["semi_torus"], false);
  EXPECT_EQ(r["cone"]["cone_dim"], "n/a");
}

TEST(Report, C2IncompleteCarriesWitnesses) {
  const Json r = analyze_report(bundled("c2_incomplete"));
  EXPECT_EQ(r["algebra"]["abelian"], false);
  EXPECT_EQ(r["algebra"]["abelian_witness"]["bracket"], "2*x*dy");
  EXPECT_EQ(r["algebra"]["subalgebra"], false);
  EXPECT_FALSE(r["algebra"]["subalgebra_witness"]["certificate"].get<std::string>().empty());
  EXPECT_EQ(r["kahler"]["kahler"], false);
  EXPECT_FALSE(r["kahler"]["residuals"].empty());
  EXPECT_EQ(r["divisor"]["tangency"][0]["remainder"], "2*x");
  const Json& c = r["completeness"];
  EXPECT_EQ(c["verdict"], "incomplete");
  EXPECT_EQ(c["tangent"], false);
  EXPECT_EQ(c["subalgebra"], false);
  EXPECT_EQ(c["agree"], true);
  EXPECT_FALSE(c["paths"].empty());
  EXPECT_EQ(r["flow"]["invariant"], false);
  EXPECT_GT(r["flow"]["max_residual"].get<double>(), 1e-2);
  EXPECT_TRUE(r["cone"].is_null());
}

TEST(Report, P3Toric) {
  const Json r = analyze_report(bundled("p3_toric"));
  EXPECT_EQ(r["divisor"]["section"], "z0*z1*z2*z3");
  EXPECT_EQ(r["cone"]["cone_dim"], 3);
  EXPECT_EQ(r["completeness"]["verdict"], "complete");
}

TEST(Report, PencilIsDegenerate) {
  const Scenario s = bundled("p2_pencil");
  EXPECT_THROW(analyze_report(s), DegenerateBasis);
  EXPECT_THROW(divisor_report(s), DegenerateBasis);
}

TEST(Report, ProbeMatchesAnalyze) {
  const Scenario s = bundled("c2_incomplete");
  const Json full = analyze_report(s);
  EXPECT_EQ(probe_report(s, {false, true, false})["ricci"], full["ricci"]);
  EXPECT_EQ(probe_report(s, {true, false, false})["completeness"], full["completeness"]);
  EXPECT_EQ(probe_report(s, {false, false, true})["flow"], full["flow"]);
}

TEST(Report, Deterministic) {
  const Scenario s = bundled("p2_nilpotent");
  EXPECT_EQ(analyze_report(s).dump(), analyze_report(s).dump());
  Scenario other = s;
  other.probe.seed = 7;
  EXPECT_NE(analyze_report(s)["ricci"].dump(), analyze_report(other)["ricci"].dump());
}

TEST(Report, MetricAtPoint) {
  const Scenario s = bundled("p2_toric");
  const Json r = metric_report(s, parse_point("1, 2+i"), 1);
  EXPECT_EQ(r["metric"]["chart"], "U1 of P2");
  EXPECT_EQ(r["metric"]["positive_definite"], true);
  EXPECT_NEAR(r["metric"]["det_g"].get<double>(), 0.2, 1e-12);
  EXPECT_THROW(metric_report(s, parse_point("0, 1"), 0), OnDivisor);
  EXPECT_THROW(metric_report(s, parse_point("1"), 0), InvalidArgument);
}

TEST(Report, TextRendering) {
  const std::string text = render_text(divisor_report(bundled("p2_nilpotent")));
  EXPECT_NE(text.find("section: z2^3"), std::string::npos);
  EXPECT_NE(text.find("- poly: z2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze " + scenario_path("p2_toric")), 0);
  EXPECT_EQ(run_cli("divisor " + scenario_path("p2_pencil")), 2);
  EXPECT_EQ(run_cli("--json analyze " + scenario_path("p2_pencil")), 2);
  EXPECT_EQ(run_cli("divisor " VFM_TEST_DATA_DIR "/bad_scenario.txt"), 3);
  EXPECT_EQ(run_cli("cone " + scenario_path("c2_incomplete")), 1);
  EXPECT_EQ(run_cli("analyze /nonexistent.txt"), 1);
  EXPECT_EQ(run_cli("metric " + scenario_path("p2_toric") + " --at \"1, 2+i\" --chart 1"), 0);
  EXPECT_EQ(run_cli("probe --ricci " + scenario_path("c2_incomplete")), 0);
}
