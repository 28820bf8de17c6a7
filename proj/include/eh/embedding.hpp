#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eh/graph.hpp"

namespace eh {

// Injective map pattern vertex -> host vertex witnessing an induced copy:
// pattern edge uv iff host edge map[u]map[v], over all pattern pairs.
struct Embedding {
    std::vector<int> map;

    std::size_t size() const { return map.size(); }
};

// nullopt when the embedding is a valid induced embedding of `pattern` into
// `host`; otherwise the first violated constraint.
std::optional<std::string> check_induced_embedding(const Graph& host, const Graph& pattern,
                                                   const Embedding& e);

}  // namespace eh
