#include <algorithm>
#include <stdexcept>

#include "eh/algorithms.hpp"
#include "eh/errors.hpp"

namespace eh {

namespace {

// Anti-adjacent split of the components of g[c_set] with both sides >= delta.
// The largest component usually is one side; when even it is smaller than
// delta, components are merged greedily (size-descending) until the first
// side reaches delta. |c_set| >= 3*delta makes the remainder large enough.
AntiPair harvest_pair(const Graph& g, const VertexSet& c_set, const VertexSet& largest,
                      std::size_t delta) {
    if (largest.size() >= delta) return {largest, c_set - largest};
    auto comps = g.components_within(c_set);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const VertexSet& x, const VertexSet& y) { return x.size() > y.size(); });
    VertexSet side(c_set.universe());
    for (const auto& c : comps) {
        side |= c;
        if (side.size() >= delta) break;
    }
    VertexSet rest = c_set - side;
    if (side.size() < delta || rest.size() < delta)
        throw std::logic_error("path_grow harvest failed to balance components");
    return {std::move(side), std::move(rest)};
}

}  // namespace

PathGrowResult path_grow_in(const Graph& g, const VertexSet& domain, int v, int t, int delta) {
    const std::size_t n = g.size();
    if (t < 1 || delta < 1) throw PreconditionError("path_grow: t and delta must be >= 1");
    if (!domain.contains(v)) throw PreconditionError("path_grow: root vertex not in domain");
    if (g.max_degree_in(domain) > static_cast<std::size_t>(delta))
        throw PreconditionError("path_grow: max degree exceeds delta");
    if (domain.size() <= static_cast<std::size_t>(t + 2) * static_cast<std::size_t>(delta))
        throw PreconditionError("path_grow: need more than (t+2)*delta vertices");
    if (!g.connected_within(domain)) throw PreconditionError("path_grow: graph not connected");

    std::vector<int> path{v};
    VertexSet closed_all(n);            // N[path] within domain
    VertexSet closed_prefix(n);         // N[path minus its last vertex]
    closed_all.add(v);
    closed_all |= VertexSet::from_bits(g.neighbours_bits(v) & domain.bits());

    for (int i = 1; i < t; ++i) {
        VertexSet c_set = domain - closed_all;
        if (c_set.size() < 3 * static_cast<std::size_t>(delta))
            throw std::logic_error("path_grow: candidate set shrank below 3*delta");

        VertexSet comp = largest_component(g, c_set);
        if (comp.size() + static_cast<std::size_t>(delta) <= c_set.size())
            return harvest_pair(g, c_set, comp, static_cast<std::size_t>(delta));

        // v_{i+1} in N(v_i) ∩ N(C_i) \ N[{v_1..v_{i-1}}]
        VertexSet candidates =
            VertexSet::from_bits(g.neighbours_bits(path.back()) & domain.bits());
        candidates &= g.neighbourhood(comp);
        candidates -= closed_prefix;
        int next = candidates.first();
        if (next < 0) throw std::logic_error("path_grow: no extension vertex available");

        path.push_back(next);
        closed_prefix = closed_all;
        closed_all.add(next);
        closed_all |= VertexSet::from_bits(g.neighbours_bits(next) & domain.bits());
    }
    return path;
}

PathGrowResult path_grow(const Graph& g, int v, int t, int delta) {
    return path_grow_in(g, g.all_vertices(), v, t, delta);
}

std::variant<AntiPair, VertexSet> grow_bud(const Graph& g, const VertexSet& pool, int v,
                                           const Rational& threshold, const Rational& size_cap) {
    const std::size_t n = g.size();
    if (pool.empty()) throw PreconditionError("grow_bud: empty pool");
    if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ParameterError("grow_bud: root vertex out of range");
    VertexSet start_cands = VertexSet::from_bits(g.neighbours_bits(v) & pool.bits());
    if (start_cands.empty())
        throw PreconditionError("grow_bud: v has no neighbour in the pool");
    if (Rational(BigInt(g.closed_neighbourhood(pool).size())) < threshold)
        throw InfeasibleError("grow_bud: pool closed neighbourhood below threshold");

    VertexSet b(n);
    VertexSet nb(n);  // N[B]
    while (true) {
        int u;
        if (b.empty()) {
            u = start_cands.first();
        } else {
            VertexSet cands = (nb - b) & pool;
            if (cands.empty())
                throw InfeasibleError("grow_bud: pool exhausted at |N[B]| = " +
                                      std::to_string(nb.size()) + " below threshold " +
                                      to_fraction_string(threshold));
            // Smallest candidate that enlarges N[B]; zero-gain candidates
            // only when nothing else is left (keeps growth from stalling).
            int best = -1;
            cands.for_each([&](int c) {
                if (best < 0 && !g.neighbours_bits(c).is_subset_of(nb.bits())) best = c;
            });
            u = best >= 0 ? best : cands.first();
        }
        b.add(u);
        nb.add(u);
        nb |= VertexSet::from_bits(g.neighbours_bits(u));

        if (Rational(BigInt(nb.size())) >= threshold) return b;
        if (Rational(BigInt(b.size())) >= size_cap) {
            VertexSet rest = g.all_vertices() - nb;
            if (rest.empty())
                throw InfeasibleError(
                    "grow_bud: size cap reached with N[B] covering the whole graph");
            return AntiPair{std::move(b), std::move(rest)};
        }
    }
}

}  // namespace eh
