#include <doctest.h>

#include "eh/generators.hpp"
#include "eh/prng.hpp"
#include "eh/structures.hpp"
#include "../support/test_support.hpp"

using namespace eh;

namespace {

const Rational kTinyAlpha = Rational(1, 1000000);

ColouredGraph two_class_graph(std::vector<std::pair<int, int>> edges, int n,
                              std::vector<int> class1, std::vector<int> class2) {
    ColouredGraph cg;
    cg.graph = std::make_shared<Graph>(Graph::from_edges(static_cast<std::size_t>(n), edges));
    cg.classes.push_back(VertexSet::from_vector(static_cast<std::size_t>(n), class1));
    cg.classes.push_back(VertexSet::from_vector(static_cast<std::size_t>(n), class2));
    return cg;
}

// Restriction of a fern to the subtree rooted at `node` (same arity).
Fern subtree_fern(const Fern& f, int node) {
    Fern out;
    out.arity = f.arity;
    std::vector<int> stack{node};
    std::vector<int> old_ids;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        old_ids.push_back(cur);
        for (int c : f.nodes[static_cast<std::size_t>(cur)].children) stack.push_back(c);
    }
    std::sort(old_ids.begin(), old_ids.end());  // parents precede children
    std::vector<int> remap(f.nodes.size(), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) remap[old_ids[i]] = static_cast<int>(i);
    for (int old_id : old_ids) {
        const auto& src = f.nodes[static_cast<std::size_t>(old_id)];
        Fern::Node nd;
        nd.parent = old_id == node ? -1 : remap[src.parent];
        for (int c : src.children) nd.children.push_back(remap[c]);
        nd.bud = src.bud;
        out.nodes.push_back(std::move(nd));
    }
    return out;
}

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("is_alpha_bud witnesses the smallest covered class") {
    // Vertex 0 adjacent to the whole second class {1,2}.
    auto cg = two_class_graph({{0, 1}, {0, 2}}, 3, {0}, {1, 2});
    auto w = is_alpha_bud(cg, VertexSet(3, {0}), Rational(1));
    REQUIRE(w.has_value());
    CHECK(*w == 1);
}

TEST_CASE("disconnected sets are never buds") {
    auto cg = two_class_graph({{0, 2}, {1, 2}}, 3, {0, 1}, {2});
    CHECK_FALSE(is_alpha_bud(cg, VertexSet(3, {0, 1}), kTinyAlpha).has_value());
    CHECK_THROWS_AS(is_alpha_bud(cg, VertexSet(3), kTinyAlpha), DomainError);
}

TEST_CASE("is_alpha_bud agrees with a direct recount on random instances") {
    Prng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 6 + static_cast<int>(rng.below(8));
        Graph g = gen_bounded_degree(n, 3, rng.next());
        ColouredGraph cg = equipartition(g, 3, rng.next());
        VertexSet b(static_cast<std::size_t>(n));
        int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        b.add(root);
        g.neighbours(root).for_each([&](int v) {
            if (rng.below(2)) b.add(v);
        });
        Rational alpha(1, 1 + static_cast<long long>(rng.below(6)));
        auto fast = is_alpha_bud(cg, b, alpha);

        std::optional<int> slow;
        if (cg.g().connected_within(b)) {
            for (std::size_t j = 0; j < cg.classes.size() && !slow; ++j) {
                std::size_t count = 0;
                cg.classes[j].for_each([&](int v) {
                    if (cg.g().neighbours_bits(v).intersects(b.bits())) ++count;
                });
                if (Rational(BigInt(count)) >= alpha * Rational(BigInt(cg.classes[j].size())))
                    slow = static_cast<int>(j);
            }
        }
        CHECK(fast == slow);
    }
}

TEST_CASE("colour compatibility") {
    auto cg = two_class_graph({}, 4, {0, 1}, {2, 3});
    CHECK(is_colour_compatible({VertexSet(4, {0}), VertexSet(4, {2, 3})}, cg));
    CHECK_FALSE(is_colour_compatible({VertexSet(4, {0}), VertexSet(4, {1})}, cg));  // same class
    CHECK_FALSE(is_colour_compatible({VertexSet(4, {0, 2})}, cg));  // straddles two classes
}

TEST_CASE("single-node fern with a witnessed bud validates") {
    // Bud {0} dominates class {1}; fern has no pairs to check.
    auto cg = two_class_graph({{0, 1}}, 2, {0}, {1});
    Fern f;
    f.arity = 2;
    f.nodes.push_back({-1, {}, Bud{VertexSet(2, {0}), 1}});
    CHECK(validate_fern(cg, f, Rational(1)).ok);
}

TEST_CASE("sibling buds sharing an edge fail anti-adjacency") {
    // Root {0} dominates children {1} and {2}; but 1-2 edge breaks siblings.
    ColouredGraph cg;
    cg.graph = std::make_shared<Graph>(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
    for (int v = 0; v < 3; ++v) cg.classes.push_back(VertexSet(3, {v}));
    Fern f;
    f.arity = 2;
    f.nodes.push_back({-1, {1, 2}, Bud{VertexSet(3, {0}), 1}});
    f.nodes.push_back({0, {}, Bud{VertexSet(3, {1}), 0}});
    f.nodes.push_back({0, {}, Bud{VertexSet(3, {2}), 0}});
    auto r = validate_fern(cg, f, kTinyAlpha);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("anti-adjacent") != std::string::npos);
}

TEST_CASE("synthetic ferns validate and their subtrees validate") {
    Prng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int arity = 1 + static_cast<int>(rng.below(3));
        int height = 1 + static_cast<int>(rng.below(3));
        auto inst = eh::test::make_synthetic_fern(arity, height, rng.next());
        auto r = validate_fern(inst.cg, inst.fern, kTinyAlpha);
        CHECK_MESSAGE(r.ok, r.reason);
        // Monotonicity under subtree restriction.
        int node = static_cast<int>(rng.below(inst.fern.nodes.size()));
        auto sub = subtree_fern(inst.fern, node);
        auto rs = validate_fern(inst.cg, sub, kTinyAlpha);
        CHECK_MESSAGE(rs.ok, rs.reason);
    }
}

TEST_CASE("colour compatibility implies pairwise disjointness") {
    Prng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = eh::test::make_synthetic_fern(2, 2, rng.next());
        std::vector<const VertexSet*> fam;
        for (const auto& nd : inst.fern.nodes) fam.push_back(&nd.bud.vertices);
        REQUIRE(is_colour_compatible(fam, inst.cg));
        for (std::size_t a = 0; a < fam.size(); ++a)
            for (std::size_t b = a + 1; b < fam.size(); ++b)
                CHECK_FALSE(fam[a]->intersects(*fam[b]));
    }
}

TEST_CASE("junior caterpillar with d = 0 is just a colour-compatible induced path") {
    ColouredGraph cg;
    cg.graph = std::make_shared<Graph>(Graph::from_edges(3, {{0, 1}, {1, 2}}));
    for (int v = 0; v < 3; ++v) cg.classes.push_back(VertexSet(3, {v}));
    JuniorCaterpillar jc;
    jc.path = {0, 1, 2};
    jc.buds.assign(3, {});
    CHECK(validate_junior(cg, jc, kTinyAlpha, 3, 0).ok);

    JuniorCaterpillar bad = jc;
    bad.path = {0, 2, 1};  // not the path order
    CHECK_FALSE(validate_junior(cg, bad, kTinyAlpha, 3, 0).ok);
}

TEST_CASE("a bud touching two path vertices fails the neighbourhood clause") {
    // Path 0-1; bud {2} adjacent to both.
    ColouredGraph cg;
    cg.graph = std::make_shared<Graph>(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
    for (int v = 0; v < 3; ++v) cg.classes.push_back(VertexSet(3, {v}));
    JuniorCaterpillar jc;
    jc.path = {0, 1};
    jc.buds = {{Bud{VertexSet(3, {2}), 0}}, {}};
    auto r = validate_junior(cg, jc, kTinyAlpha, 2, 1);
    CHECK_FALSE(r.ok);
}

TEST_CASE("grows_on clauses") {
    Prng rng(3);
    auto inst = eh::test::make_synthetic_fern(2, 2, rng.next());
    const std::size_t n = inst.cg.g().size();

    CHECK(grows_on(inst.cg, inst.fern, VertexSet(n)));  // empty set: vacuous

    VertexSet inside = inst.fern.nodes[0].bud.vertices;
    CHECK_FALSE(grows_on(inst.cg, inst.fern, inside));  // intersects a bud
}

TEST_CASE("malformed fern JSON is rejected, not crashed on") {
    nlohmann::json forward_parent = {
        {"arity", 1},
        {"nodes",
         {{{"parent", -1}, {"bud", {{"vertices", {0}}, {"witness_colour", 0}}}},
          {{"parent", 5}, {"bud", {{"vertices", {1}}, {"witness_colour", 0}}}}}}};
    CHECK_THROWS_AS(fern_from_json(forward_parent, 4), ParameterError);
    nlohmann::json rooted_wrong = forward_parent;
    rooted_wrong["nodes"][0]["parent"] = 0;
    CHECK_THROWS_AS(fern_from_json(rooted_wrong, 4), ParameterError);
}

TEST_CASE("fern JSON round trip") {
    auto inst = eh::test::make_synthetic_fern(2, 2, 99);
    auto j = fern_to_json(inst.fern);
    Fern back = fern_from_json(j, inst.cg.g().size());
    CHECK(back.arity == inst.fern.arity);
    REQUIRE(back.nodes.size() == inst.fern.nodes.size());
    for (std::size_t i = 0; i < back.nodes.size(); ++i) {
        CHECK(back.nodes[i].parent == inst.fern.nodes[i].parent);
        CHECK(back.nodes[i].bud.vertices == inst.fern.nodes[i].bud.vertices);
    }
    CHECK(validate_fern(inst.cg, back, kTinyAlpha).ok);

    JuniorCaterpillar jc;
    jc.path = {0};
    jc.buds = {{Bud{VertexSet(4, {2, 3}), 1}}};
    auto jj = junior_to_json(jc);
    JuniorCaterpillar jback = junior_from_json(jj, 4);
    CHECK(jback.path == jc.path);
    CHECK(jback.buds[0][0].vertices == jc.buds[0][0].vertices);
}

}  // TEST_SUITE
