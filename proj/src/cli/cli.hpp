#pragma once

#include "finsub/homology.hpp"
#include "finsub/spectral.hpp"
#include "finsub/verify.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace finsub::cli {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_budget = 3, exit_internal = 4 };

nlohmann::json groups_json(const std::vector<HomologyGroup>& groups);
nlohmann::json page_json(const Page& p);
nlohmann::json report_json(const VerificationReport& r, bool timing);
std::string report_text(const VerificationReport& r, bool timing);

/// Runs the command line; output goes to `out` unless --out names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finsub::cli
