#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eh/graph.hpp"
#include "eh/structures.hpp"

namespace eh {

// Exit codes: 0 verified certificate / success, 1 usage error, 2 diagnostic
// failure. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// DOT renderings (export-dot subcommand).
std::string graph_to_dot(const Graph& g);
std::string fern_to_dot(const Fern& f);
std::string junior_to_dot(const JuniorCaterpillar& jc);

}  // namespace eh
