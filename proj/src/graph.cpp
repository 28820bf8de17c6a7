#include "eh/graph.hpp"

#include <algorithm>
#include <string>

namespace eh {

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw ParameterError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
        if (u == v) throw ParameterError("self-loop rejected at vertex " + std::to_string(u));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

std::size_t Graph::max_degree() const {
    std::size_t m = 0;
    for (const auto& row : adj_) m = std::max(m, row.count());
    return m;
}

std::size_t Graph::max_degree_in(const VertexSet& s) const {
    std::size_t m = 0;
    s.for_each([&](int v) { m = std::max(m, (adj_[v] & s.bits()).count()); });
    return m;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (auto v = adj_[u].find_next(u); v != Bits::npos; v = adj_[u].find_next(v))
            out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return out;
}

VertexSet Graph::neighbourhood(const VertexSet& s) const {
    Bits acc(size());
    s.for_each([&](int v) { acc |= adj_[v]; });
    return VertexSet::from_bits(std::move(acc));
}

VertexSet Graph::closed_neighbourhood(const VertexSet& s) const {
    Bits acc = s.bits();
    s.for_each([&](int v) { acc |= adj_[v]; });
    return VertexSet::from_bits(std::move(acc));
}

bool Graph::anti_adjacent(const VertexSet& a, const VertexSet& b) const {
    bool clean = true;
    a.for_each([&](int v) {
        if (clean && adj_[v].intersects(b.bits())) clean = false;
    });
    return clean;
}

bool Graph::fully_adjacent(const VertexSet& a, const VertexSet& b) const {
    bool full = true;
    a.for_each([&](int v) {
        if (full && !b.bits().is_subset_of(adj_[v])) full = false;
    });
    return full;
}

VertexSet Graph::component_of(int v, const VertexSet& s) const {
    Bits comp(size());
    comp.set(v);
    Bits frontier = comp;
    while (frontier.any()) {
        Bits next(size());
        for (auto u = frontier.find_first(); u != Bits::npos; u = frontier.find_next(u))
            next |= adj_[u];
        next &= s.bits();
        next -= comp;
        comp |= next;
        frontier = std::move(next);
    }
    return VertexSet::from_bits(std::move(comp));
}

bool Graph::connected_within(const VertexSet& s) const {
    if (s.empty()) return true;
    return component_of(s.first(), s).size() == s.size();
}

std::vector<VertexSet> Graph::components_within(const VertexSet& s) const {
    std::vector<VertexSet> comps;
    Bits left = s.bits();
    while (left.any()) {
        int v = static_cast<int>(left.find_first());
        VertexSet c = component_of(v, VertexSet::from_bits(left));
        left -= c.bits();
        comps.push_back(std::move(c));
    }
    return comps;
}

Graph complement(const Graph& g) {
    Graph out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        out.adj_[v] = ~g.adj_[v];
        out.adj_[v].reset(v);
    }
    return out;
}

VertexSet largest_component(const Graph& g, const VertexSet& s) {
    VertexSet best(g.size());
    for (const auto& c : g.components_within(s))
        if (c.size() > best.size()) best = c;  // first-found wins ties: smallest min id
    return best;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> orig = s.to_vector();
    std::vector<int> local(g.size(), -1);
    for (std::size_t i = 0; i < orig.size(); ++i) local[orig[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < orig.size(); ++i) {
        const Bits& row = g.neighbours_bits(orig[i]);
        for (auto v = row.find_next(orig[i]); v != Bits::npos; v = row.find_next(v))
            if (local[v] >= 0) edges.emplace_back(static_cast<int>(i), local[v]);
    }
    return {Graph::from_edges(orig.size(), edges), std::move(orig)};
}

}  // namespace eh
