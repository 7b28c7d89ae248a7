#pragma once

#include <iosfwd>
#include <string>

namespace btwlab {

/// Runs one command line. The response (or CSV for `figure`) goes to
/// `out` unless --output names a file. Returns the process exit code:
/// 0 ok/refuted, 2 inconclusive, 1 error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// CSV rows recomputed from the library for one of fig1_arc, fig2_density,
/// fig3_cases, fig4_triangles. Throws btw::Error(invalid_argument) for any
/// other name.
std::string figure_csv(const std::string& name, bool full_precision = false);

}  // namespace btwlab
