#pragma once

#include <cstdint>
#include <vector>

#include "eh/algorithms.hpp"
#include "eh/caterpillar.hpp"
#include "eh/colouring.hpp"
#include "eh/graph.hpp"
#include "eh/structures.hpp"

namespace eh::test {

// All graphs on exactly n vertices up to isomorphism, as upper-triangle edge
// bitmasks (bit index from pair_index). Brute-force canonical forms; n <= 7.
std::vector<std::uint32_t> nonisomorphic_graphs(int n);
int pair_index(int i, int j, int n);
Graph graph_from_code(std::uint32_t code, int n);

// Every caterpillar on at most five vertices (8 graphs).
std::vector<Graph> small_caterpillar_patterns();

// The unique 10-vertex tree whose degree->=3 vertices do not lie on a path:
// a center joined to three degree-3 vertices, each carrying two leaves.
Graph non_caterpillar_tree10();

// A synthetic fern instance: host graph + colouring + a fern guaranteed to
// validate at any alpha <= 1 (every bud witnesses some class).
struct FernInstance {
    ColouredGraph cg;
    Fern fern;
};
FernInstance make_synthetic_fern(int arity, int height, std::uint64_t seed);

// Layered instance for the search-invariant harness: ell classes of m
// vertices; inside each class a path plus sparse random edges; between each
// class pair exactly c perfect matchings (so every vertex has exactly c
// neighbours in every other class). split_first_class replaces class 0's
// interior with two disconnected halves to force a component harvest.
ColouredGraph make_layered_instance(int ell, int m, int c, std::uint64_t seed,
                                    bool split_first_class = false);

// Planted leg-attachment instance: a junior caterpillar whose buds are blob
// paths with pendant clouds sized so every bud growth threshold binds.
struct PlantedLegInstance {
    ColouredGraph cg;
    JuniorCaterpillar jc;
    CaterpillarShape shape;
    Rational eps;
    std::size_t delta_u;  // eps * n, integral by construction
};
PlantedLegInstance make_planted_leg_instance(CaterpillarShape shape, std::size_t delta_u,
                                             std::size_t n);

}  // namespace eh::test
