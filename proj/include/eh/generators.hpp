#pragma once

#include <cstdint>
#include <optional>

#include "eh/caterpillar.hpp"
#include "eh/certificate.hpp"
#include "eh/graph.hpp"
#include "eh/rational.hpp"

namespace eh {

// Seeded instance generators. All are deterministic functions of their
// parameters and seed; planted generators also return the known certificate
// for harnesses to verify against.

// G(n,p) with exact rational p.
Graph gen_gnp(int n, const Rational& p, std::uint64_t seed);

// Random graph with max degree <= delta; connected by construction for
// delta >= 2 (seeded path backbone plus random extra edges under the cap).
// delta == 1 yields a perfect matching prefix.
Graph gen_bounded_degree(int n, int delta, std::uint64_t seed);

struct PlantedInstance {
    Graph graph{0};
    Certificate sidecar;
};

// The template caterpillar of `shape` on ids [0, m), plus filler vertices
// with sparse random edges; sidecar is the identity embedding.
PlantedInstance gen_planted_caterpillar(CaterpillarShape shape, int n, std::uint64_t seed);

// Two anti-adjacent vertex blocks of size floor(frac*n) each, random edges
// everywhere else; sidecar is the anti_pair.
PlantedInstance gen_planted_bipartite_hole(int n, const Rational& frac, std::uint64_t seed);

// Two disjoint cliques of sizes ceil(n/2), floor(n/2); sidecar anti_pair.
PlantedInstance gen_two_cliques(int n, std::uint64_t seed);

}  // namespace eh
