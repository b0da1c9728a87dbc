#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcprod/graph.hpp"

namespace wcprod {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCounterexample = 2, kExitCapacity = 3 };

/// Resolves one graph argument: "@path" reads a graph6 or edge-list file, a
/// string containing ':' is a FamilySpec, anything else is graph6.
Graph parse_graph_argument(std::string_view text);

/// Flattens a JSON document into "path: value" lines, one per leaf.
std::string render_text(const nlohmann::json& doc);

/// Runs the command line; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcprod
