#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "vfm/errors.hpp"
#include "vfm/report.hpp"
#include "vfm/scenario.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* text = std::getenv("VFM_SEED");
  if (text == nullptr || *text == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || text[0] == '-') throw vfm::InvalidArgument(std::string("VFM_SEED is not a non-negative integer: ") + text);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze holomorphic vector-field bases: anticanonical divisor, flat metric, completeness, Kaehler cone."};
  app.require_subcommand(1);

  bool json = false;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", json, "Print the report as JSON")->configurable(false);
  app.add_option("--seed", seed, "Probe seed (overrides the scenario file and VFM_SEED)");
  app.set_version_flag("--version", "vfm 1.0");

  std::string path;
  auto scenario_arg = [&path](CLI::App* sub) {
    sub->add_option("scenario", path, "Scenario file")->required()->check(CLI::ExistingFile);
    sub->fallthrough();
  };

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline");
  scenario_arg(analyze);
  auto* divisor = app.add_subcommand("divisor", "Divisor, its factors and tangency");
  scenario_arg(divisor);
  auto* metric = app.add_subcommand("metric", "Metric and its inverse frame at a point");
  scenario_arg(metric);
  std::string at;
  int chart = 0;
  metric->add_option("--at", at, "Point in chart coordinates, e.g. \"1, 2+i\"")->required();
  metric->add_option("--chart", chart, "Chart index U_i for projective scenarios");
  auto* cone = app.add_subcommand("cone", "Normal form and Kaehler cone dimension of the lattice");
  scenario_arg(cone);
  auto* probe = app.add_subcommand("probe", "Numeric probes");
  scenario_arg(probe);
  vfm::ProbeSelection which;
  probe->add_flag("--complete", which.complete, "Completeness along approach paths");
  probe->add_flag("--ricci", which.ricci, "Ricci-flatness certificate and finite differences");
  probe->add_flag("--flow", which.flow, "Flow invariance of the divisor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    vfm::Scenario s = vfm::load_scenario(path, env_seed());
    if (seed) s.probe.seed = *seed;
    vfm::Json report;
    if (analyze->parsed()) report = vfm::analyze_report(s);
    else if (divisor->parsed()) report = vfm::divisor_report(s);
    else if (metric->parsed()) report = vfm::metric_report(s, vfm::parse_point(at), chart);
    else if (cone->parsed()) report = vfm::cone_report(s);
    else report = vfm::probe_report(s, which);
    std::cout << (json ? report.dump(2) + "\n" : vfm::render_text(report));
    return 0;
  } catch (const vfm::Error& e) {
    if (json) std::cout << vfm::error_report(e).dump(2) << '\n';
    else std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return vfm::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    if (json) std::cout << vfm::error_report("Error", e.what()).dump(2) << '\n';
    else std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
