#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vfm/cone.hpp"
#include "vfm/fields.hpp"

namespace vfm {

struct ProbeConfig {
  std::uint64_t seed = 42;
  double h = 1e-4;         // Ricci stencil step
  int depth = 24;          // dyadic blocks per completeness path
  int points = 20;         // Ricci sample points
  int paths = 4;           // divisor points per chart for completeness and flow
  int steps = 1000;        // flow steps
  double t_max = 1.0;      // flow time
  double ricci_tol = 1e-5;
  double flow_tol = 1e-6;
};

/// One scenario file. Line-based; `#` starts a comment.
///
///   name p2_toric
///   ambient P2                 (or C2)
///   vars x y                   (affine only; default z1..zn)
///   field s1 = z1 d1;
///   lattice (i, 0), (0, i)     (optional; empty list = trivial lattice)
///   seed 42
///   probe.h 1e-4               (also probe.depth, probe.points, probe.paths,
///                               probe.steps, probe.t_max)
struct Scenario {
  std::string name;
  bool projective = false;
  int n = 0;
  std::vector<std::string> vars;  // affine coordinates
  std::vector<std::string> field_names;
  std::vector<ProjectiveField> projective_fields;
  std::vector<VectorField> affine_fields;
  std::optional<LatticeData> lattice;
  ProbeConfig probe;
  bool seed_given = false;

  std::string ambient() const { return (projective ? "P" : "C") + std::to_string(n); }
  /// Text of field i in the input grammar.
  std::string field_text(std::size_t i) const;
};

/// Throws ParseError with the line and column of the offending token.
/// `default_seed` applies when the file has no `seed` line.
Scenario parse_scenario(std::string_view text, std::optional<std::uint64_t> default_seed = std::nullopt);

/// Reads a file; the scenario name defaults to the file stem.
Scenario load_scenario(const std::string& path, std::optional<std::uint64_t> default_seed = std::nullopt);

}  // namespace vfm
