#include "eh/structures.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace eh {

int Fern::height() const {
    std::vector<int> depth(nodes.size(), 0);
    int h = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        depth[i] = depth[nodes[i].parent] + 1;  // parents precede children
        h = std::max(h, depth[i]);
    }
    return h;
}

VertexSet Fern::vertex_union(std::size_t universe) const {
    VertexSet u(universe);
    for (const auto& nd : nodes) u |= nd.bud.vertices;
    return u;
}

std::optional<int> is_alpha_bud(const ColouredGraph& cg, const VertexSet& b,
                                const Rational& alpha) {
    if (b.empty()) throw DomainError("is_alpha_bud: empty vertex set");
    if (!cg.g().connected_within(b)) return std::nullopt;
    VertexSet nb = cg.g().neighbourhood(b);
    for (std::size_t j = 0; j < cg.classes.size(); ++j) {
        BigInt covered{(nb & cg.classes[j]).size()};
        BigInt class_size{cg.classes[j].size()};
        if (Rational(covered) >= alpha * Rational(class_size)) return static_cast<int>(j);
    }
    return std::nullopt;
}

namespace {

// Class index if s sits entirely inside one colour class, else -1.
int home_class(const VertexSet& s, const ColouredGraph& cg) {
    for (std::size_t j = 0; j < cg.classes.size(); ++j)
        if (s.is_subset_of(cg.classes[j])) return static_cast<int>(j);
    return -1;
}

}  // namespace

bool is_colour_compatible(const std::vector<const VertexSet*>& family, const ColouredGraph& cg) {
    std::vector<char> taken(cg.classes.size(), 0);
    for (const VertexSet* s : family) {
        int j = home_class(*s, cg);
        if (j < 0 || taken[j]) return false;
        taken[j] = 1;
    }
    return true;
}

bool is_colour_compatible(const std::vector<VertexSet>& family, const ColouredGraph& cg) {
    std::vector<const VertexSet*> ptrs;
    ptrs.reserve(family.size());
    for (const auto& s : family) ptrs.push_back(&s);
    return is_colour_compatible(ptrs, cg);
}

CheckResult validate_fern(const ColouredGraph& cg, const Fern& f, const Rational& alpha) {
    if (f.nodes.empty()) return CheckResult::fail("fern has no nodes");
    if (f.arity < 1) return CheckResult::fail("fern arity must be >= 1");

    // Tree structure: node 0 is the root, parents precede children, internal
    // nodes have exactly `arity` children.
    if (f.nodes[0].parent != -1) return CheckResult::fail("node 0 is not a root");
    for (std::size_t i = 1; i < f.nodes.size(); ++i) {
        int p = f.nodes[i].parent;
        if (p < 0 || static_cast<std::size_t>(p) >= i)
            return CheckResult::fail("node " + std::to_string(i) + " has invalid parent");
        if (std::find(f.nodes[p].children.begin(), f.nodes[p].children.end(),
                      static_cast<int>(i)) == f.nodes[p].children.end())
            return CheckResult::fail("parent link of node " + std::to_string(i) +
                                     " not mirrored in children");
    }
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const auto& ch = f.nodes[i].children;
        if (!ch.empty() && static_cast<int>(ch.size()) != f.arity)
            return CheckResult::fail("internal node " + std::to_string(i) + " has " +
                                     std::to_string(ch.size()) + " children, arity is " +
                                     std::to_string(f.arity));
        for (int c : ch)
            if (c <= 0 || static_cast<std::size_t>(c) >= f.nodes.size() ||
                f.nodes[c].parent != static_cast<int>(i))
                return CheckResult::fail("child link of node " + std::to_string(i) + " broken");
    }

    // Connectivity of each bud.
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const auto& b = f.nodes[i].bud.vertices;
        if (b.empty()) return CheckResult::fail("bud " + std::to_string(i) + " is empty");
        if (!cg.g().connected_within(b))
            return CheckResult::fail("bud " + std::to_string(i) + " is not connected");
    }

    // Alpha-bud bound.
    for (std::size_t i = 0; i < f.nodes.size(); ++i)
        if (!is_alpha_bud(cg, f.nodes[i].bud.vertices, alpha))
            return CheckResult::fail("bud " + std::to_string(i) +
                                     " misses the alpha neighbourhood bound");

    // Colour compatibility of the bud family.
    std::vector<const VertexSet*> fam;
    fam.reserve(f.nodes.size());
    for (const auto& nd : f.nodes) fam.push_back(&nd.bud.vertices);
    if (!is_colour_compatible(fam, cg))
        return CheckResult::fail("bud family is not colour-compatible");

    // Adjacency pattern: parent buds dominate child buds; all other pairs
    // anti-adjacent.
    for (std::size_t s = 0; s < f.nodes.size(); ++s)
        for (std::size_t u = s + 1; u < f.nodes.size(); ++u) {
            const auto& bs = f.nodes[s].bud.vertices;
            const auto& bu = f.nodes[u].bud.vertices;
            if (f.nodes[u].parent == static_cast<int>(s)) {
                bool dominated = true;
                bs.for_each([&](int v) {
                    if (dominated && !cg.g().neighbours_bits(v).intersects(bu.bits()))
                        dominated = false;
                });
                if (!dominated)
                    return CheckResult::fail("a vertex of parent bud " + std::to_string(s) +
                                             " has no neighbour in child bud " +
                                             std::to_string(u));
            } else if (!cg.g().anti_adjacent(bs, bu)) {
                return CheckResult::fail("buds " + std::to_string(s) + " and " +
                                         std::to_string(u) + " are not anti-adjacent");
            }
        }
    return CheckResult::pass();
}

CheckResult validate_junior(const ColouredGraph& cg, const JuniorCaterpillar& jc,
                            const Rational& alpha, int h, int d) {
    const Graph& g = cg.g();
    if (static_cast<int>(jc.path.size()) != h)
        return CheckResult::fail("path has " + std::to_string(jc.path.size()) +
                                 " vertices, expected h = " + std::to_string(h));
    if (static_cast<int>(jc.buds.size()) != h)
        return CheckResult::fail("bud matrix has wrong row count");
    for (const auto& row : jc.buds)
        if (static_cast<int>(row.size()) != d)
            return CheckResult::fail("bud matrix row has wrong size, expected d = " +
                                     std::to_string(d));

    // Path induces a path in the given order.
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            bool want = (j == i + 1);
            if (g.adjacent(jc.path[i], jc.path[j]) != want)
                return CheckResult::fail(std::string(want ? "missing" : "chord") +
                                         " path edge between positions " + std::to_string(i) +
                                         " and " + std::to_string(j));
        }

    // Buds are alpha-buds (connectivity included).
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < d; ++j)
            if (!is_alpha_bud(cg, jc.buds[i][j].vertices, alpha))
                return CheckResult::fail("bud (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") is not an alpha-bud");

    // Pairwise anti-adjacency of buds.
    std::vector<const VertexSet*> flat;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < d; ++j) flat.push_back(&jc.buds[i][j].vertices);
    for (std::size_t a = 0; a < flat.size(); ++a)
        for (std::size_t b = a + 1; b < flat.size(); ++b)
            if (!g.anti_adjacent(*flat[a], *flat[b]))
                return CheckResult::fail("buds are not pairwise anti-adjacent");

    // Buds plus path singletons are colour-compatible.
    const std::size_t n = g.size();
    std::vector<VertexSet> fam;
    for (const VertexSet* b : flat) fam.push_back(*b);
    for (int v : jc.path) fam.push_back(VertexSet(n, {v}));
    if (!is_colour_compatible(fam, cg))
        return CheckResult::fail("buds plus path singletons are not colour-compatible");

    // Each bud meets the path exactly at its own vertex.
    VertexSet path_set = VertexSet::from_vector(n, jc.path);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < d; ++j) {
            VertexSet touched = g.neighbourhood(jc.buds[i][j].vertices) & path_set;
            if (!(touched == VertexSet(n, {jc.path[i]})))
                return CheckResult::fail("bud (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") does not meet the path exactly at its vertex");
        }
    return CheckResult::pass();
}

bool grows_on(const ColouredGraph& cg, const Fern& f, const VertexSet& z) {
    const Graph& g = cg.g();
    for (const auto& nd : f.nodes)
        if (z.intersects(nd.bud.vertices)) return false;
    for (std::size_t i = 1; i < f.nodes.size(); ++i)
        if (!g.anti_adjacent(z, f.nodes[i].bud.vertices)) return false;
    const VertexSet& root_bud = f.nodes[f.root()].bud.vertices;
    bool ok = true;
    z.for_each([&](int v) {
        if (ok && !g.neighbours_bits(v).intersects(root_bud.bits())) ok = false;
    });
    return ok;
}

nlohmann::ordered_json fern_to_json(const Fern& f) {
    nlohmann::ordered_json j;
    j["arity"] = f.arity;
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& nd : f.nodes) {
        nlohmann::ordered_json n;
        n["parent"] = nd.parent;
        n["bud"] = {{"vertices", nd.bud.vertices.to_vector()},
                    {"witness_colour", nd.bud.witness_colour}};
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

Fern fern_from_json(const nlohmann::json& j, std::size_t universe) {
    try {
        Fern f;
        f.arity = j.at("arity").get<int>();
        const auto& nodes = j.at("nodes");
        f.nodes.resize(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            int parent = nodes[i].at("parent").get<int>();
            // Parents must precede their children; node 0 is the root.
            if (i == 0 ? parent != -1 : (parent < 0 || static_cast<std::size_t>(parent) >= i))
                throw ParameterError("bad fern JSON: node " + std::to_string(i) +
                                     " has parent " + std::to_string(parent));
            f.nodes[i].parent = parent;
            if (i > 0) f.nodes[parent].children.push_back(static_cast<int>(i));
            f.nodes[i].bud.vertices = VertexSet::from_vector(
                universe, nodes[i].at("bud").at("vertices").get<std::vector<int>>());
            f.nodes[i].bud.witness_colour = nodes[i].at("bud").at("witness_colour").get<int>();
        }
        return f;
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError(std::string("bad fern JSON: ") + ex.what());
    }
}

nlohmann::ordered_json junior_to_json(const JuniorCaterpillar& jc) {
    nlohmann::ordered_json j;
    j["path"] = jc.path;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : jc.buds) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& b : row)
            r.push_back({{"vertices", b.vertices.to_vector()},
                         {"witness_colour", b.witness_colour}});
        rows.push_back(std::move(r));
    }
    j["buds"] = std::move(rows);
    return j;
}

JuniorCaterpillar junior_from_json(const nlohmann::json& j, std::size_t universe) {
    try {
        JuniorCaterpillar jc;
        jc.path = j.at("path").get<std::vector<int>>();
        for (const auto& row : j.at("buds")) {
            std::vector<Bud> r;
            for (const auto& b : row) {
                Bud bud;
                bud.vertices =
                    VertexSet::from_vector(universe, b.at("vertices").get<std::vector<int>>());
                bud.witness_colour = b.at("witness_colour").get<int>();
                r.push_back(std::move(bud));
            }
            jc.buds.push_back(std::move(r));
        }
        return jc;
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError(std::string("bad junior caterpillar JSON: ") + ex.what());
    }
}

}  // namespace eh
