#pragma once

#include <optional>
#include <vector>

#include "eh/embedding.hpp"
#include "eh/graph.hpp"

namespace eh {

// Parameters of the template caterpillar T_{h,d,t}: a spine path on h
// vertices, d legs per spine vertex, t vertices per leg. Valid shapes are
// h,d,t >= 1, or the degenerate bare-path shapes (h,0,0) (a single vertex
// when h = 1).
struct CaterpillarShape {
    int h = 1;
    int d = 0;
    int t = 0;

    bool valid() const { return h >= 1 && ((d >= 1 && t >= 1) || (d == 0 && t == 0)); }
    long long vertex_count() const {
        return static_cast<long long>(h) +
               static_cast<long long>(h) * d * t;
    }
    friend bool operator==(const CaterpillarShape&, const CaterpillarShape&) = default;
};

// The canonical labeled T_{h,d,t}. Vertex order: spine v_1..v_h first, then
// legs in (i,j) lexicographic order, each leg listed from its attachment end.
struct LabeledCaterpillar {
    CaterpillarShape shape;
    Graph graph{0};
    std::vector<int> spine;
    // legs[i][j] = vertices of leg (i+1, j+1), attachment end first.
    std::vector<std::vector<std::vector<int>>> legs;
};

LabeledCaterpillar make_caterpillar(CaterpillarShape shape);

struct CaterpillarRecognition {
    CaterpillarShape shape;
    // Induced embedding of the recognized graph into make_caterpillar(shape).
    Embedding embedding;
};

// Present iff g is a tree whose degree->=3 vertices lie on a single path.
// The returned shape dominates g but is not minimized.
std::optional<CaterpillarRecognition> is_caterpillar(const Graph& g);

// Shape policy: h = vertices on the chosen spine path, d = max legs at any
// spine vertex, t = max leg length. Throws DomainError off-domain.
CaterpillarShape shape_for(const Graph& g);
inline CaterpillarShape shape_for(const LabeledCaterpillar& c) { return c.shape; }

}  // namespace eh
