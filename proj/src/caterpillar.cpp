#include "eh/caterpillar.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace eh {

std::optional<std::string> check_induced_embedding(const Graph& host, const Graph& pattern,
                                                   const Embedding& e) {
    if (e.map.size() != pattern.size())
        return "embedding covers " + std::to_string(e.map.size()) + " vertices, pattern has " +
               std::to_string(pattern.size());
    std::vector<char> used(host.size(), 0);
    for (std::size_t i = 0; i < e.map.size(); ++i) {
        int img = e.map[i];
        if (img < 0 || static_cast<std::size_t>(img) >= host.size())
            return "image of pattern vertex " + std::to_string(i) + " out of host range";
        if (used[img])
            return "embedding not injective at host vertex " + std::to_string(img);
        used[img] = 1;
    }
    for (std::size_t i = 0; i < e.map.size(); ++i)
        for (std::size_t j = i + 1; j < e.map.size(); ++j) {
            bool pe = pattern.adjacent(static_cast<int>(i), static_cast<int>(j));
            bool he = host.adjacent(e.map[i], e.map[j]);
            if (pe != he)
                return std::string(pe ? "missing host edge (" : "extra host edge (") +
                       std::to_string(e.map[i]) + "," + std::to_string(e.map[j]) +
                       ") for pattern pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    return std::nullopt;
}

LabeledCaterpillar make_caterpillar(CaterpillarShape shape) {
    if (!shape.valid())
        throw ParameterError("invalid caterpillar shape (" + std::to_string(shape.h) + "," +
                             std::to_string(shape.d) + "," + std::to_string(shape.t) + ")");
    const int h = shape.h, d = shape.d, t = shape.t;
    const long long n = shape.vertex_count();

    LabeledCaterpillar out;
    out.shape = shape;
    std::vector<std::pair<int, int>> edges;
    out.spine.resize(h);
    for (int i = 0; i < h; ++i) {
        out.spine[i] = i;
        if (i + 1 < h) edges.emplace_back(i, i + 1);
    }
    out.legs.assign(h, std::vector<std::vector<int>>(d));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < d; ++j) {
            int base = h + (i * d + j) * t;
            auto& leg = out.legs[i][j];
            leg.resize(t);
            for (int p = 0; p < t; ++p) {
                leg[p] = base + p;
                if (p + 1 < t) edges.emplace_back(base + p, base + p + 1);
            }
            edges.emplace_back(i, base);  // v_i -- w_ij
        }
    out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
    return out;
}

namespace {

// BFS distances and parents over the whole (connected) tree.
void bfs_tree(const Graph& g, int src, std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(g.size(), -1);
    parent.assign(g.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbours(u).for_each([&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push(v);
            }
        });
    }
}

int farthest_in(const std::vector<int>& members, const std::vector<int>& dist) {
    int best = members.front();
    for (int v : members)
        if (dist[v] > dist[best]) best = v;
    return best;
}

}  // namespace

std::optional<CaterpillarRecognition> is_caterpillar(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    if (g.edge_count() != n - 1) return std::nullopt;
    if (!g.connected_within(g.all_vertices())) return std::nullopt;

    std::vector<int> branch;  // vertices of degree >= 3
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<int>(v)) >= 3) branch.push_back(static_cast<int>(v));

    std::vector<int> spine;
    if (branch.empty()) {
        // g is a path; root the spine at the smaller endpoint.
        if (n == 1) {
            CaterpillarRecognition r;
            r.shape = {1, 0, 0};
            r.embedding.map = {0};
            return r;
        }
        int root = -1;
        for (std::size_t v = 0; v < n && root < 0; ++v)
            if (g.degree(static_cast<int>(v)) == 1) root = static_cast<int>(v);
        spine = {root};
    } else {
        std::vector<int> dist, parent;
        bfs_tree(g, branch.front(), dist, parent);
        int u = farthest_in(branch, dist);
        bfs_tree(g, u, dist, parent);
        int w = farthest_in(branch, dist);
        for (int v = w; v >= 0; v = parent[v]) spine.push_back(v);
        std::reverse(spine.begin(), spine.end());  // u .. w
        VertexSet on_spine = VertexSet::from_vector(n, spine);
        for (int b : branch)
            if (!on_spine.contains(b)) return std::nullopt;
    }

    VertexSet on_spine = VertexSet::from_vector(n, spine);
    const int h = static_cast<int>(spine.size());
    std::vector<std::vector<std::vector<int>>> legs(h);
    int d = 0, t = 0;
    for (int i = 0; i < h; ++i) {
        g.neighbours(spine[i]).for_each([&](int nb) {
            if (on_spine.contains(nb)) return;
            std::vector<int> leg{nb};
            int prev = spine[i], cur = nb;
            while (g.degree(cur) == 2) {
                int next = -1;
                g.neighbours(cur).for_each([&](int x) {
                    if (x != prev) next = x;
                });
                prev = cur;
                cur = next;
                leg.push_back(cur);
            }
            legs[i].push_back(std::move(leg));
        });
        d = std::max(d, static_cast<int>(legs[i].size()));
        for (const auto& leg : legs[i]) t = std::max(t, static_cast<int>(leg.size()));
    }

    CaterpillarRecognition r;
    r.shape = {h, d, t};
    r.embedding.map.assign(n, -1);
    for (int i = 0; i < h; ++i) r.embedding.map[spine[i]] = i;
    for (int i = 0; i < h; ++i)
        for (std::size_t j = 0; j < legs[i].size(); ++j) {
            int base = h + (i * d + static_cast<int>(j)) * t;
            for (std::size_t p = 0; p < legs[i][j].size(); ++p)
                r.embedding.map[legs[i][j][p]] = base + static_cast<int>(p);
        }

    auto tpl = make_caterpillar(r.shape);
    if (auto why = check_induced_embedding(tpl.graph, g, r.embedding))
        throw std::logic_error("caterpillar recognition produced a bad embedding: " + *why);
    return r;
}

CaterpillarShape shape_for(const Graph& g) {
    auto r = is_caterpillar(g);
    if (!r) throw DomainError("shape_for: input graph is not a caterpillar");
    return r->shape;
}

}  // namespace eh
