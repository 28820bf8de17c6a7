#include "eh/generators.hpp"

#include <algorithm>
#include <numeric>

#include "eh/prng.hpp"

namespace eh {

namespace {

// Exact Bernoulli(p): draw 64 bits, compare against floor(p * 2^64).
class CoinFlipper {
  public:
    CoinFlipper(const Rational& p, Prng& rng) : rng_(rng) {
        if (p < 0 || p > 1) throw ParameterError("edge probability must lie in [0,1]");
        BigInt scaled = (numerator(p) << 64) / denominator(p);
        full_ = scaled >= (BigInt(1) << 64);
        threshold_ = full_ ? ~0ULL : scaled.convert_to<std::uint64_t>();
    }
    bool flip() { return full_ || rng_.next() < threshold_; }

  private:
    Prng& rng_;
    std::uint64_t threshold_ = 0;
    bool full_ = false;
};

}  // namespace

Graph gen_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 0) throw ParameterError("gnp: n must be >= 0");
    Prng rng(seed);
    CoinFlipper coin(p, rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin.flip()) edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph gen_bounded_degree(int n, int delta, std::uint64_t seed) {
    if (n < 0 || delta < 0) throw ParameterError("bounded_degree: n and delta must be >= 0");
    Prng rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    auto connected_already = [&](int u, int v) {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    };
    auto add_edge = [&](int u, int v) {
        edges.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++deg[u];
        ++deg[v];
    };

    if (delta >= 2) {
        for (int i = 0; i + 1 < n; ++i) add_edge(order[i], order[i + 1]);  // backbone path
        const int extra_target = delta >= 3 ? n * (delta - 2) / 3 : n / 8;
        int attempts = 8 * (extra_target + 1);
        for (int added = 0; added < extra_target && attempts > 0; --attempts) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (u == v || deg[u] >= delta || deg[v] >= delta || connected_already(u, v)) continue;
            add_edge(u, v);
            ++added;
        }
    } else if (delta == 1) {
        for (int i = 0; i + 1 < n; i += 2) add_edge(order[i], order[i + 1]);
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

PlantedInstance gen_planted_caterpillar(CaterpillarShape shape, int n, std::uint64_t seed) {
    auto tpl = make_caterpillar(shape);
    const int m = static_cast<int>(tpl.graph.size());
    if (n < m)
        throw ParameterError("planted_caterpillar: n = " + std::to_string(n) +
                             " below the template size " + std::to_string(m));
    Prng rng(seed);
    CoinFlipper filler_coin(Rational(1, 4), rng);
    std::vector<std::pair<int, int>> edges = tpl.graph.edges();
    for (int u = m; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (filler_coin.flip()) edges.emplace_back(u, v);
    // Sparse filler-to-template edges; the planted identity embedding stays
    // induced because only template-template pairs matter to it.
    if (m > 0)
        for (int u = m; u < n; ++u)
            if (rng.below(4) == 0)
                edges.emplace_back(u, static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));

    PlantedInstance out;
    out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
    Embedding e;
    e.map.resize(static_cast<std::size_t>(m));
    std::iota(e.map.begin(), e.map.end(), 0);
    out.sidecar = Certificate::pattern(CertificateKind::induced_pattern, shape, std::move(e),
                                       static_cast<std::size_t>(n));
    return out;
}

PlantedInstance gen_planted_bipartite_hole(int n, const Rational& frac, std::uint64_t seed) {
    if (n < 2) throw ParameterError("planted_bipartite_hole: need n >= 2");
    if (!(frac > 0) || frac > Rational(1, 2))
        throw ParameterError("planted_bipartite_hole: frac must lie in (0, 1/2]");
    const int s = static_cast<int>(
        BigInt(numerator(frac) * n / denominator(frac)).convert_to<long long>());
    if (s < 1) throw ParameterError("planted_bipartite_hole: frac*n below 1");

    Prng rng(seed);
    CoinFlipper coin(Rational(1, 2), rng);
    std::vector<std::pair<int, int>> edges;
    auto in_a = [&](int v) { return v < s; };
    auto in_b = [&](int v) { return v >= s && v < 2 * s; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if ((in_a(u) && in_b(v)) || (in_b(u) && in_a(v))) continue;  // the hole
            if (coin.flip()) edges.emplace_back(u, v);
        }

    PlantedInstance out;
    out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
    VertexSet a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int v = 0; v < s; ++v) a.add(v);
    for (int v = s; v < 2 * s; ++v) b.add(v);
    out.sidecar = Certificate::pair(CertificateKind::anti_pair, std::move(a), std::move(b),
                                    static_cast<std::size_t>(n));
    return out;
}

PlantedInstance gen_two_cliques(int n, std::uint64_t seed) {
    (void)seed;  // shape is fully determined; seed kept for interface symmetry
    if (n < 2) throw ParameterError("two_cliques: need n >= 2");
    const int s = (n + 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) edges.emplace_back(u, v);
    for (int u = s; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);

    PlantedInstance out;
    out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
    VertexSet a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int v = 0; v < s; ++v) a.add(v);
    for (int v = s; v < n; ++v) b.add(v);
    out.sidecar = Certificate::pair(CertificateKind::anti_pair, std::move(a), std::move(b),
                                    static_cast<std::size_t>(n));
    return out;
}

}  // namespace eh
