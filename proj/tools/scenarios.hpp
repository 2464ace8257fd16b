#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

const std::vector<std::string>& scenario_names();

// Runs a packaged scenario, printing one "label=value PASS|FAIL" line per check.
// Returns true when every check passed. Throws Error(unknown_scenario).
bool reproduce(const std::string& name, std::ostream& out);

}  // namespace cantor::cli
