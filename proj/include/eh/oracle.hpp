#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "eh/embedding.hpp"
#include "eh/graph.hpp"

namespace eh {

// Backtracking induced-subgraph search. Pattern vertices are assigned in
// descending-degree order (ties by id); host candidates are tried in
// ascending id, filtered by degree and consistency with the mapped prefix.
// Complete and deterministic.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

// Same search with a node-expansion budget; `exhausted` reports whether the
// search space was cut short (absence is then inconclusive).
struct BudgetedSearch {
    std::optional<Embedding> embedding;
    bool exhausted = false;
};
BudgetedSearch find_induced_budgeted(const Graph& host, const Graph& pattern,
                                     std::uint64_t node_budget);

// Exhaustive enumeration of injective maps, host candidates in ascending id.
// Hard cap host n <= 10.
std::optional<Embedding> find_induced_naive(const Graph& host, const Graph& pattern);

// Exact maximizer of min(|A|,|B|) over disjoint anti-adjacent pairs, or
// nullopt when no nonempty pair exists. Hard cap n <= 20. Enumerates every
// vertex subset S and balances the components of g[S] across the two sides,
// which reaches every anti-adjacent pair.
std::optional<std::pair<VertexSet, VertexSet>> max_anti_pair_bruteforce(const Graph& g);

}  // namespace eh
