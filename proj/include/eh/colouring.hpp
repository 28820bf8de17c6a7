#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eh/graph.hpp"

namespace eh {

// A graph with an ordered partition of (a subset of) its vertices into
// colour classes. Classes are pairwise disjoint; vertices may be left out
// (equipartition discards n mod l of them).
struct ColouredGraph {
    std::shared_ptr<const Graph> graph;
    std::vector<VertexSet> classes;

    const Graph& g() const { return *graph; }
    std::size_t colour_count() const { return classes.size(); }

    // Index of the class containing v, or -1.
    int colour_of(int v) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].contains(v)) return static_cast<int>(i);
        return -1;
    }
};

// Discards the n mod l largest-id vertices, then deals the rest into l
// classes of exactly floor(n/l) via a seeded shuffle. Deterministic in seed.
ColouredGraph equipartition(std::shared_ptr<const Graph> g, int ell, std::uint64_t seed);
ColouredGraph equipartition(const Graph& g, int ell, std::uint64_t seed);

}  // namespace eh
