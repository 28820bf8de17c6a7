#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "eh/errors.hpp"

namespace eh {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// A set of vertex ids inside a fixed universe [0, n). Backed by a bitset so
// the search kernels can take unions/intersections a word at a time.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe) {}
    VertexSet(std::size_t universe, std::initializer_list<int> vs) : bits_(universe) {
        for (int v : vs) add(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        s.bits_.set();
        return s;
    }
    static VertexSet from_vector(std::size_t universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet from_bits(Bits b) {
        VertexSet s;
        s.bits_ = std::move(b);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return !bits_.any(); }

    bool contains(int v) const {
        return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_.test(v);
    }
    void add(int v) {
        if (v < 0 || static_cast<std::size_t>(v) >= bits_.size())
            throw ParameterError("vertex id out of range for VertexSet");
        bits_.set(v);
    }
    void remove(int v) {
        if (v >= 0 && static_cast<std::size_t>(v) < bits_.size()) bits_.reset(v);
    }

    // Smallest member, or -1 when empty.
    int first() const {
        auto p = bits_.find_first();
        return p == Bits::npos ? -1 : static_cast<int>(p);
    }

    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
    bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }

    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    template <class F>
    void for_each(F f) const {
        for (auto v = bits_.find_first(); v != Bits::npos; v = bits_.find_next(v))
            f(static_cast<int>(v));
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const Bits& bits() const { return bits_; }

  private:
    Bits bits_;
};

// Immutable finite simple graph on vertices 0..n-1 with bitset adjacency.
// No self-loops; adjacency is symmetric by construction.
class Graph {
  public:
    explicit Graph(std::size_t n) : adj_(n, Bits(n)) {}

    // Validates ids and rejects self-loops; parallel edges collapse.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const { return adj_.size(); }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bits& neighbours_bits(int v) const { return adj_[v]; }
    VertexSet neighbours(int v) const { return VertexSet::from_bits(adj_[v]); }

    std::size_t degree(int v) const { return adj_[v].count(); }
    std::size_t degree_in(int v, const VertexSet& s) const { return (adj_[v] & s.bits()).count(); }
    std::size_t max_degree() const;
    std::size_t max_degree_in(const VertexSet& s) const;

    std::size_t edge_count() const;
    // Sorted (u < v, lexicographic) edge list.
    std::vector<std::pair<int, int>> edges() const;

    // N(S): every vertex with a neighbour in S. May intersect S.
    VertexSet neighbourhood(const VertexSet& s) const;
    // N[S] = N(S) ∪ S.
    VertexSet closed_neighbourhood(const VertexSet& s) const;

    bool anti_adjacent(const VertexSet& a, const VertexSet& b) const;
    bool fully_adjacent(const VertexSet& a, const VertexSet& b) const;

    // Connectivity of the induced subgraph g[s]; empty s counts as connected.
    bool connected_within(const VertexSet& s) const;
    // Component of g[s] containing v (v must be in s).
    VertexSet component_of(int v, const VertexSet& s) const;
    // All components of g[s], ordered by smallest member.
    std::vector<VertexSet> components_within(const VertexSet& s) const;

    VertexSet all_vertices() const { return VertexSet::full(size()); }

  private:
    std::vector<Bits> adj_;

    friend Graph complement(const Graph& g);
};

Graph complement(const Graph& g);

// Maximum-cardinality component of g[s]; ties broken towards the component
// with the smallest minimum vertex id. Empty s yields the empty set.
VertexSet largest_component(const Graph& g, const VertexSet& s);

// g[s] relabeled to 0..|s|-1 plus the map from new id to original id
// (ascending original order).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace eh
