#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "vfm/errors.hpp"
#include "vfm/numeric.hpp"
#include "vfm/scenario.hpp"

namespace vfm {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Which probes `probe` runs. All false means all three.
struct ProbeSelection {
  bool complete = false;
  bool ricci = false;
  bool flow = false;
};

/// Full pipeline: divisor, algebra, kahler, ricci, completeness, flow, cone.
/// Throws DegenerateBasis before any numeric work when det S vanishes.
Json analyze_report(const Scenario& s);
Json divisor_report(const Scenario& s);
/// g, sigma and positivity at a point of chart U_chart (affine: chart 0).
Json metric_report(const Scenario& s, const Point& at, int chart = 0);
Json cone_report(const Scenario& s);
Json probe_report(const Scenario& s, ProbeSelection which);

/// Comma-separated constants, e.g. "1, 2+i, 1/2".
Point parse_point(const std::string& text);

Json error_report(const Error& e);
Json error_report(const std::string& kind, const std::string& what);

/// Human-readable rendering of any report above.
std::string render_text(const Json& report);

/// 0 success, 2 DegenerateBasis, 3 ParseError, 1 anything else.
int exit_code_for(const std::string& error_kind);

}  // namespace vfm
