#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "glf/types.hpp"

namespace glf::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 evaluation
/// error, anything else comes from argument parsing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Accepts "a", "a+bi", "a-bi", "bi" and "a,b".
Complex parse_complex(const std::string& text);
/// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace glf::cli
