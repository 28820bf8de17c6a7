#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "eh/colouring.hpp"
#include "eh/errors.hpp"
#include "eh/graph.hpp"
#include "eh/rational.hpp"

namespace eh {

// A connected vertex set whose neighbourhood covers an alpha-fraction of
// some colour class. witness_colour records the class found at creation;
// validators always recompute.
struct Bud {
    VertexSet vertices;
    int witness_colour = -1;
};

// Rooted tree of buds with fixed internal arity. Node 0 is the root. Parent
// bud vertices all have a neighbour in each child bud; every other bud pair
// is anti-adjacent.
struct Fern {
    int arity = 1;  // children per internal node (the paper-level d+1)

    struct Node {
        int parent = -1;
        std::vector<int> children;
        Bud bud;
    };
    std::vector<Node> nodes;

    int root() const { return 0; }
    // Max edges on a root-to-leaf path.
    int height() const;
    // Union of all bud vertex sets.
    VertexSet vertex_union(std::size_t universe) const;
};

// Induced path v_1..v_h plus an h x d matrix of pairwise anti-adjacent buds,
// each attached to exactly its own path vertex; buds plus path singletons
// are colour-compatible.
struct JuniorCaterpillar {
    std::vector<int> path;
    std::vector<std::vector<Bud>> buds;  // buds[i] = private buds of path[i]
};

// Smallest witnessing colour class if b is connected and covers an
// alpha-fraction of some class's neighbourhood requirement; nullopt
// otherwise. Empty b is a domain error.
std::optional<int> is_alpha_bud(const ColouredGraph& cg, const VertexSet& b,
                                const Rational& alpha);

// Each set entirely inside one colour class, classes pairwise distinct.
bool is_colour_compatible(const std::vector<const VertexSet*>& family, const ColouredGraph& cg);
bool is_colour_compatible(const std::vector<VertexSet>& family, const ColouredGraph& cg);

// Clause order: tree structure, connectivity, bud bound, compatibility,
// adjacency pattern. First failure reported.
CheckResult validate_fern(const ColouredGraph& cg, const Fern& f, const Rational& alpha);

CheckResult validate_junior(const ColouredGraph& cg, const JuniorCaterpillar& jc,
                            const Rational& alpha, int h, int d);

// z is disjoint from all buds, anti-adjacent to every non-root bud, and
// every vertex of z has a neighbour in the root bud.
bool grows_on(const ColouredGraph& cg, const Fern& f, const VertexSet& z);

// Debug serialization (nodes, parent links, bud vertex arrays, witness
// colours). No wire protocol.
nlohmann::ordered_json fern_to_json(const Fern& f);
Fern fern_from_json(const nlohmann::json& j, std::size_t universe);
nlohmann::ordered_json junior_to_json(const JuniorCaterpillar& jc);
JuniorCaterpillar junior_from_json(const nlohmann::json& j, std::size_t universe);

}  // namespace eh
