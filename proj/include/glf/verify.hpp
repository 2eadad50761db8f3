#pragma once

// Numerical theorem checks shared by the command-line tool and the
// acceptance runner. Each suite is a list of named checks with a residual,
// a tolerance and a pass flag.

#include <string>
#include <vector>

#include "glf/eisenstein.hpp"
#include "glf/lfun.hpp"
#include "glf/resolvent.hpp"

namespace glf::verify {

/// Truncation and quadrature settings scaled together.
struct Budget {
  std::string name = "default";
  lfun::QuadratureSpec quad;
  eisenstein::LatticeTruncation lattice;
  resolvent::ResolventTruncation resolvent;
  /// coset radius for the I_{w,s} family checks, which integrate calG_w
  int family_radius = 10;
};

/// "fast", "default" or "paranoid"; ParameterError otherwise.
Budget budget_preset(const std::string& name);

struct Check {
  std::string theorem;
  std::string test;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;  ///< acceptance criterion number, 0 for supporting suites
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
  /// residual of the check with the largest residual / tolerance ratio
  double max_residual() const;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string title;
};

/// All suites in run order: the ten acceptance criteria, then supporting suites.
const std::vector<SuiteInfo>& suites();

/// ParameterError for unknown names.
SuiteResult run_suite(const std::string& name, const Budget& budget = {});

/// Default evaluation points away from the singular set and elliptic points.
std::vector<Complex> default_z_grid();
std::vector<Complex> default_s_grid();

}  // namespace glf::verify
