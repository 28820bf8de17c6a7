#include "test_support.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "eh/prng.hpp"

namespace eh::test {

int pair_index(int i, int j, int /*n*/) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

Graph graph_from_code(std::uint32_t code, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_index(i, j, n) & 1u) edges.emplace_back(i, j);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

namespace {

// Permutations of [0,n) with per-permutation source-bit tables so canonical
// codes are a handful of shifts per permutation.
struct PermTables {
    int n = 0;
    int bits = 0;
    std::vector<std::vector<int>> src;  // src[perm][target_bit] = source bit
};

const PermTables& perm_tables(int n) {
    static std::array<PermTables, 8> cache;
    PermTables& t = cache[static_cast<std::size_t>(n)];
    if (t.n == n) return t;
    t.n = n;
    t.bits = n * (n - 1) / 2;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<int> src(static_cast<std::size_t>(t.bits));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                src[static_cast<std::size_t>(pair_index(i, j, n))] = pair_index(p[i], p[j], n);
        t.src.push_back(std::move(src));
    } while (std::next_permutation(p.begin(), p.end()));
    return t;
}

std::uint32_t canonical_code(std::uint32_t code, int n) {
    const PermTables& t = perm_tables(n);
    std::uint32_t best = ~0u;
    for (const auto& src : t.src) {
        std::uint32_t relabeled = 0;
        for (int k = 0; k < t.bits; ++k) relabeled |= ((code >> src[k]) & 1u) << k;
        best = std::min(best, relabeled);
    }
    return best;
}

}  // namespace

std::vector<std::uint32_t> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("nonisomorphic_graphs supports 1 <= n <= 7");
    static std::array<std::vector<std::uint32_t>, 8> cache;
    if (!cache[static_cast<std::size_t>(n)].empty()) return cache[static_cast<std::size_t>(n)];

    std::vector<std::uint32_t> prev{0};  // the single 1-vertex graph
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint32_t> seen;
        for (std::uint32_t parent : prev)
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::uint32_t code = parent;
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1u) code |= 1u << pair_index(v, k - 1, k);
                seen.insert(canonical_code(code, k));
            }
        prev.assign(seen.begin(), seen.end());
        std::sort(prev.begin(), prev.end());
    }
    cache[static_cast<std::size_t>(n)] = prev;
    return prev;
}

std::vector<Graph> small_caterpillar_patterns() {
    std::vector<Graph> out;
    out.push_back(make_caterpillar({1, 0, 0}).graph);  // K_1
    out.push_back(make_caterpillar({1, 1, 1}).graph);  // P_2
    out.push_back(make_caterpillar({1, 1, 2}).graph);  // P_3
    out.push_back(make_caterpillar({1, 1, 3}).graph);  // P_4
    out.push_back(make_caterpillar({1, 1, 4}).graph);  // P_5
    out.push_back(make_caterpillar({1, 3, 1}).graph);  // K_{1,3}
    out.push_back(make_caterpillar({1, 4, 1}).graph);  // K_{1,4}
    out.push_back(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}));  // chair
    return out;
}

Graph non_caterpillar_tree10() {
    return Graph::from_edges(10, {{0, 1},
                                  {0, 2},
                                  {0, 3},
                                  {1, 4},
                                  {1, 5},
                                  {2, 6},
                                  {2, 7},
                                  {3, 8},
                                  {3, 9}});
}

FernInstance make_synthetic_fern(int arity, int height, std::uint64_t seed) {
    Prng rng(seed);

    // Tree skeleton: a spine of height+1 nodes guarantees the height; spine
    // internals get arity-1 extra leaf children; some leaves are expanded to
    // internal nodes for variety.
    struct ProtoNode {
        int parent = -1;
        std::vector<int> children;
        int depth = 0;
    };
    std::vector<ProtoNode> proto(1);
    auto add_child = [&](int parent) {
        int id = static_cast<int>(proto.size());
        proto.push_back({parent, {}, proto[static_cast<std::size_t>(parent)].depth + 1});
        proto[static_cast<std::size_t>(parent)].children.push_back(id);
        return id;
    };
    int spine_tip = 0;
    for (int level = 0; level < height; ++level) {
        int next = add_child(spine_tip);
        for (int extra = 1; extra < arity; ++extra) add_child(spine_tip);
        spine_tip = next;
    }
    // Occasionally expand a leaf into an internal node.
    for (std::size_t v = 1; v < proto.size(); ++v)
        if (proto[v].children.empty() && proto[v].depth < height + 1 && rng.below(3) == 0)
            for (int extra = 0; extra < arity; ++extra) add_child(static_cast<int>(v));

    // Buds: contiguous id blocks, path-connected, one colour class each.
    std::vector<int> bud_size(proto.size());
    std::vector<int> bud_base(proto.size());
    int n = 0;
    for (std::size_t v = 0; v < proto.size(); ++v) {
        bud_size[v] = 1 + static_cast<int>(rng.below(3));
        bud_base[v] = n;
        n += bud_size[v];
    }

    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < proto.size(); ++v)
        for (int p = 0; p + 1 < bud_size[v]; ++p)
            edges.emplace_back(bud_base[v] + p, bud_base[v] + p + 1);
    // Parent buds dominate child buds: every parent vertex gets a neighbour
    // in each child bud.
    for (std::size_t s = 0; s < proto.size(); ++s)
        for (int t : proto[s].children)
            for (int p = 0; p < bud_size[s]; ++p) {
                int target =
                    bud_base[static_cast<std::size_t>(t)] +
                    static_cast<int>(rng.below(static_cast<std::uint64_t>(
                        bud_size[static_cast<std::size_t>(t)])));
                edges.emplace_back(bud_base[s] + p, target);
            }

    FernInstance inst;
    inst.cg.graph = std::make_shared<Graph>(
        Graph::from_edges(static_cast<std::size_t>(n), edges));
    inst.fern.arity = arity;
    inst.fern.nodes.resize(proto.size());
    for (std::size_t v = 0; v < proto.size(); ++v) {
        inst.fern.nodes[v].parent = proto[v].parent;
        inst.fern.nodes[v].children = proto[v].children;
        VertexSet bud(static_cast<std::size_t>(n));
        for (int p = 0; p < bud_size[v]; ++p) bud.add(bud_base[v] + p);
        int witness = proto[v].parent >= 0 ? proto[v].parent
                                           : (proto[v].children.empty() ? static_cast<int>(v)
                                                                        : proto[v].children[0]);
        inst.fern.nodes[v].bud = Bud{std::move(bud), witness};
        inst.cg.classes.emplace_back(static_cast<std::size_t>(n));
        for (int p = 0; p < bud_size[v]; ++p) inst.cg.classes[v].add(bud_base[v] + p);
    }
    return inst;
}

ColouredGraph make_layered_instance(int ell, int m, int c, std::uint64_t seed,
                                    bool split_first_class) {
    Prng rng(seed);
    const int n = ell * m;
    std::set<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    };

    for (int i = 0; i < ell; ++i) {
        const int base = i * m;
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), base);
        rng.shuffle(order);
        if (i == 0 && split_first_class) {
            // Two disconnected in-class halves: the component harvest fires.
            for (int p = 0; p + 1 < m / 2; ++p) add(order[p], order[p + 1]);
            for (int p = m / 2; p + 1 < m; ++p) add(order[p], order[p + 1]);
        } else {
            for (int p = 0; p + 1 < m; ++p) add(order[p], order[p + 1]);
            for (int v = base; v < base + m; ++v)
                for (int tries = 0; tries < 4; ++tries)
                    add(v, base + static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
        }
    }
    // Exactly c matchings between each class pair: cross-degree into every
    // other class is at most c, which is what the invariant proofs need.
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            for (int r = 0; r < c; ++r) {
                std::vector<int> sigma(static_cast<std::size_t>(m));
                std::iota(sigma.begin(), sigma.end(), 0);
                rng.shuffle(sigma);
                for (int p = 0; p < m; ++p) add(i * m + p, j * m + sigma[p]);
            }

    ColouredGraph cg;
    std::vector<std::pair<int, int>> edge_list(edges.begin(), edges.end());
    cg.graph = std::make_shared<Graph>(Graph::from_edges(static_cast<std::size_t>(n), edge_list));
    for (int i = 0; i < ell; ++i) {
        VertexSet cls(static_cast<std::size_t>(n));
        for (int v = i * m; v < (i + 1) * m; ++v) cls.add(v);
        cg.classes.push_back(std::move(cls));
    }
    return cg;
}

PlantedLegInstance make_planted_leg_instance(CaterpillarShape shape, std::size_t delta_u,
                                             std::size_t n) {
    const int h = shape.h, d = shape.d, t = shape.t;
    const int legs = h * d;
    const long long hdt = static_cast<long long>(h) * d * t;
    if (legs < 1 || delta_u < 8) throw std::invalid_argument("planted legs: bad parameters");
    const std::size_t q = delta_u - 5;  // cloud pendants per blob vertex

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < h; ++i) edges.emplace_back(i, i + 1);
    int next = h;

    PlantedLegInstance inst;
    inst.shape = shape;
    inst.delta_u = delta_u;
    inst.eps = Rational(BigInt(delta_u), BigInt(n));
    inst.jc.path.resize(static_cast<std::size_t>(h));
    std::iota(inst.jc.path.begin(), inst.jc.path.end(), 0);
    inst.jc.buds.assign(static_cast<std::size_t>(h), {});

    std::vector<std::vector<int>> blob_ids(static_cast<std::size_t>(legs));
    for (int k = 1; k <= legs; ++k) {
        const int i = (k - 1) / d;
        const BigInt threshold = BigInt(10) * hdt * big_pow(2, static_cast<unsigned>(k)) *
                                 BigInt(delta_u);
        const BigInt blob_count_big = (threshold + BigInt(q)) / BigInt(q + 1) + 1;
        const std::size_t blob_count = blob_count_big.convert_to<std::size_t>();
        if (blob_count + 2 >= delta_u)
            throw std::invalid_argument("planted legs: blob would trip the size cap");

        auto& blob = blob_ids[static_cast<std::size_t>(k - 1)];
        for (std::size_t p = 0; p < blob_count; ++p) {
            blob.push_back(next);
            if (p == 0)
                edges.emplace_back(i, next);  // v_i -- blob root
            else
                edges.emplace_back(next - 1 - static_cast<int>(q), next);
            int blob_vertex = next++;
            for (std::size_t cl = 0; cl < q; ++cl) edges.emplace_back(blob_vertex, next++);
        }
    }
    if (static_cast<std::size_t>(next) > n)
        throw std::invalid_argument("planted legs: n too small for the blob layout");

    inst.cg.graph = std::make_shared<Graph>(Graph::from_edges(n, edges));
    // One class per path vertex, one per blob; clouds stay classless.
    for (int i = 0; i < h; ++i) inst.cg.classes.push_back(VertexSet(n, {i}));
    for (int k = 1; k <= legs; ++k) {
        const int i = (k - 1) / d;
        VertexSet bud(n);
        for (int v : blob_ids[static_cast<std::size_t>(k - 1)]) bud.add(v);
        inst.cg.classes.push_back(bud);
        inst.jc.buds[static_cast<std::size_t>(i)].push_back(Bud{bud, i});
    }
    return inst;
}

}  // namespace eh::test
