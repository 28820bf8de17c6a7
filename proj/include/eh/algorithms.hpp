#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eh/caterpillar.hpp"
#include "eh/colouring.hpp"
#include "eh/embedding.hpp"
#include "eh/graph.hpp"
#include "eh/rational.hpp"
#include "eh/structures.hpp"

namespace eh {

// An anti-adjacent disjoint pair in the graph currently being searched.
struct AntiPair {
    VertexSet a;
    VertexSet b;
};

// Either an anti-adjacent pair with both sides >= delta, or an induced path
// on exactly t vertices whose first vertex is the requested root.
using PathGrowResult = std::variant<AntiPair, std::vector<int>>;

// Path-growing. Preconditions (checked eagerly): g connected, max degree
// <= delta, |V| > (t+2)*delta, t >= 1, delta >= 1, v in range. Before each
// extension the candidate set C = V \ N[path] is tested: if the largest
// component of g[C] has <= |C| - delta vertices the pair is harvested,
// otherwise the path grows into the largest component's neighbourhood.
PathGrowResult path_grow(const Graph& g, int v, int t, int delta);

// Same procedure confined to g[domain]; vertex ids stay those of g.
PathGrowResult path_grow_in(const Graph& g, const VertexSet& domain, int v, int t, int delta);

// Grows a connected B inside `pool`, starting at a neighbour of v, one
// vertex at a time (smallest id, preferring candidates that enlarge N[B])
// until |N[B]| >= threshold. If |B| reaches size_cap during growth, emits
// the anti-adjacent pair (B, V \ N[B]) instead. Pool exhaustion below the
// threshold raises InfeasibleError.
std::variant<AntiPair, VertexSet> grow_bud(const Graph& g, const VertexSet& pool, int v,
                                           const Rational& threshold, const Rational& size_cap);

// Per-leg internals exposed for bound rechecks and debugging.
struct AttachTrace {
    struct Step {
        int k = 0;                 // 1-based leg index
        Rational threshold;        // |N[B^k]| growth target
        VertexSet bud;             // B^k
        VertexSet closed_nbhd;     // N[B^k]
        VertexSet c_set;           // C^k
        VertexSet d_set;           // D^k (filled on the descending pass)
        std::vector<int> leg;      // P^k, root first
    };
    std::vector<Step> steps;
};

// Extends a validated junior caterpillar to a full induced T_{h,d,t}: grows
// buds B^k at thresholds 10*h*d*t*2^k*eps*n, carves the fresh-neighbourhood
// sets C^k, then grows legs with path_grow inside the D^k sets in descending
// k. Any harvested pair is returned as-is. Requires max degree <= eps*n.
std::variant<AntiPair, Embedding> attach_legs(const Graph& g, const JuniorCaterpillar& jc,
                                              CaterpillarShape shape, const Rational& eps,
                                              AttachTrace* trace = nullptr);

// Converts a fern of height >= h and arity d+1 into an (alpha,h,d)-junior
// caterpillar by walking a deepest root path and harvesting sibling buds.
JuniorCaterpillar fern_to_junior(const ColouredGraph& cg, const Fern& f, int h, int d);

// Snapshot of the iterative fern-building procedure after step k.
struct SearchState {
    int k = 0;
    std::vector<int> active;                 // I^k, ascending
    std::map<int, VertexSet> working;        // i -> W^k_i
    std::map<int, std::vector<Fern>> families;  // i -> F^k_i

    std::size_t total_buds() const {
        std::size_t c = 0;
        for (const auto& [i, fs] : families)
            for (const auto& f : fs) c += f.nodes.size();
        return c;
    }
};

// Called with every state (k = 0 included); depth counts recursion levels.
using SearchObserver =
    std::function<void(int depth, const SearchState& state, const ColouredGraph& cg,
                       const Rational& alpha, int d)>;

// The iterative junior-caterpillar search. Every structural failure en route
// is an anti-adjacent pair; diagnostics arise only under parameter overrides
// that break the constant schedule's arithmetic.
std::variant<AntiPair, JuniorCaterpillar> junior_search(const ColouredGraph& cg, int h, int d,
                                                        const Rational& alpha,
                                                        const SearchObserver& observer = {});

// Checks properties P1..P6 of a search state; nullopt when all hold.
std::optional<std::string> check_search_invariants(const ColouredGraph& cg,
                                                   const SearchState& state,
                                                   const Rational& alpha, int d);

}  // namespace eh
