#include <doctest.h>

#include "eh/certificate.hpp"
#include "eh/generators.hpp"
#include "eh/oracle.hpp"
#include "eh/prng.hpp"
#include "../support/test_support.hpp"

using namespace eh;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_SUITE("oracle searches") {

TEST_CASE("C_5 contains P_4 but neither K_3 nor P_5") {
    Graph c5 = cycle_graph(5);
    auto emb = find_induced(c5, path_graph(4));
    REQUIRE(emb.has_value());
    CHECK_FALSE(check_induced_embedding(c5, path_graph(4), *emb).has_value());
    CHECK(find_induced_naive(c5, path_graph(4)).has_value());

    CHECK_FALSE(find_induced(c5, triangle()).has_value());
    CHECK_FALSE(find_induced_naive(c5, triangle()).has_value());

    CHECK_FALSE(find_induced(c5, path_graph(5)).has_value());
    CHECK_FALSE(find_induced_naive(c5, path_graph(5)).has_value());
}

TEST_CASE("naive search edge cases") {
    Graph host = gen_gnp(6, Rational(1, 2), 9);
    CHECK(find_induced_naive(host, path_graph(1)).has_value());  // single vertex
    Graph edgeless = Graph(4);
    CHECK_FALSE(find_induced_naive(edgeless, path_graph(2)).has_value());  // K_2 needs an edge
    CHECK_THROWS_AS(find_induced_naive(Graph(11), path_graph(2)), SizeError);
}

TEST_CASE("returned embeddings always pass the independent induced check") {
    Prng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph host = gen_gnp(8, Rational(1, 2), rng.next());
        Graph pattern = eh::test::small_caterpillar_patterns()[rng.below(8)];
        auto a = find_induced(host, pattern);
        if (a) CHECK_FALSE(check_induced_embedding(host, pattern, *a).has_value());
        if (host.size() <= 10) {
            auto b = find_induced_naive(host, pattern);
            CHECK(a.has_value() == b.has_value());
            if (b) CHECK_FALSE(check_induced_embedding(host, pattern, *b).has_value());
        }
    }
}

TEST_CASE("budgeted search reports exhaustion honestly") {
    Graph host = gen_gnp(12, Rational(1, 2), 23);
    Graph pattern = path_graph(5);
    auto full = find_induced(host, pattern);
    auto tiny = find_induced_budgeted(host, pattern, 1);
    if (!tiny.embedding && full) CHECK(tiny.exhausted);
}

TEST_CASE("max_anti_pair_bruteforce on the stated examples") {
    // 2K_2: two disjoint edges.
    Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto r = max_anti_pair_bruteforce(two_edges);
    REQUIRE(r.has_value());
    CHECK(std::min(r->first.size(), r->second.size()) == 2);

    // K_5: no anti-adjacent pair at all.
    std::vector<std::pair<int, int>> ke;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) ke.emplace_back(i, j);
    CHECK_FALSE(max_anti_pair_bruteforce(Graph::from_edges(5, ke)).has_value());

    // Edgeless on 6: balanced split.
    auto e6 = max_anti_pair_bruteforce(Graph(6));
    REQUIRE(e6.has_value());
    CHECK(std::min(e6->first.size(), e6->second.size()) == 3);

    CHECK_THROWS_AS(max_anti_pair_bruteforce(Graph(21)), SizeError);
}

namespace {

// Independent optimum: assign every vertex to A, B, or neither (3^n ways)
// and keep the best anti-adjacent assignment.
std::size_t ternary_optimum(const Graph& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    std::vector<int> side(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            VertexSet a(n), b(n);
            for (std::size_t u = 0; u < n; ++u) {
                if (side[u] == 1) a.add(static_cast<int>(u));
                if (side[u] == 2) b.add(static_cast<int>(u));
            }
            if (a.empty() || b.empty() || !g.anti_adjacent(a, b)) return;
            best = std::max(best, std::min(a.size(), b.size()));
            return;
        }
        for (int s = 0; s < 3; ++s) {
            side[v] = s;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace

TEST_CASE("bruteforce pairs match an independent ternary enumeration") {
    Prng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.below(5));  // n <= 7 keeps 3^n tame
        Graph g = gen_gnp(n, Rational(1, 2), rng.next());
        auto r = max_anti_pair_bruteforce(g);
        std::size_t expected = ternary_optimum(g);
        if (!r) {
            CHECK(expected == 0);
            continue;
        }
        CHECK(g.anti_adjacent(r->first, r->second));
        CHECK_FALSE(r->first.intersects(r->second));
        CHECK(std::min(r->first.size(), r->second.size()) == expected);
    }
}

}  // TEST_SUITE

TEST_SUITE("certificates") {

TEST_CASE("anti_pair verification on 2K_2") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto cert = Certificate::pair(CertificateKind::anti_pair, VertexSet(4, {0, 1}),
                                  VertexSet(4, {2, 3}), 4);
    CHECK(verify_certificate(g, cert).ok);
}

TEST_CASE("full_pair between anti-adjacent sets fails naming the missing edge") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto cert = Certificate::pair(CertificateKind::full_pair, VertexSet(4, {0, 1}),
                                  VertexSet(4, {2, 3}), 4);
    auto r = verify_certificate(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("missing edge") != std::string::npos);
}

TEST_CASE("anti_pair with a crossing edge names it") {
    Graph g = Graph::from_edges(4, {{0, 2}});
    auto cert = Certificate::pair(CertificateKind::anti_pair, VertexSet(4, {0, 1}),
                                  VertexSet(4, {2, 3}), 4);
    auto r = verify_certificate(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("edge (0,2)") != std::string::npos);
}

TEST_CASE("pattern certificates re-check the embedding edge by edge") {
    auto inst = gen_planted_caterpillar({2, 1, 2}, 20, 77);
    CHECK(verify_certificate(inst.graph, inst.sidecar).ok);

    // Remove one template edge from the host: verification pinpoints it.
    auto edges = inst.graph.edges();
    std::vector<std::pair<int, int>> fewer;
    for (auto e : edges)
        if (!(e.first == 0 && e.second == 1)) fewer.push_back(e);
    Graph damaged = Graph::from_edges(inst.graph.size(), fewer);
    auto r = verify_certificate(damaged, inst.sidecar);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("missing host edge") != std::string::npos);
}

TEST_CASE("fractions must match the sets exactly") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto cert = Certificate::pair(CertificateKind::anti_pair, VertexSet(4, {0, 1}),
                                  VertexSet(4, {2, 3}), 4);
    cert.fraction_a = Rational(1, 3);
    auto r = verify_certificate(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("fraction_a") != std::string::npos);
}

TEST_CASE("out-of-range ids are malformed, not merely invalid") {
    Graph g(3);
    auto cert = Certificate::pair(CertificateKind::anti_pair, VertexSet(9, {0}),
                                  VertexSet(9, {8}), 9);
    CHECK_THROWS_AS(verify_certificate(g, cert), MalformedCertificateError);
}

TEST_CASE("JSON round trip preserves every field") {
    auto inst = gen_planted_caterpillar({2, 2, 1}, 18, 3);
    auto j = certificate_to_json(inst.sidecar);
    CHECK(j.contains("kind"));
    CHECK(j.contains("set_a"));
    CHECK(j.contains("set_b"));
    CHECK(j.contains("shape"));
    CHECK(j.contains("embedding"));
    CHECK(j.contains("fraction_a"));
    CHECK(j.contains("fraction_b"));
    Certificate back = certificate_from_json(j);
    CHECK(back.kind == inst.sidecar.kind);
    CHECK(verify_certificate(inst.graph, back).ok);
    CHECK(certificate_to_json(back) == j);

    auto pair_cert = Certificate::pair(CertificateKind::full_pair, VertexSet(5, {0, 2}),
                                       VertexSet(5, {1, 4}), 5);
    auto pj = certificate_to_json(pair_cert);
    CHECK(pj["shape"].is_null());
    CHECK(pj["embedding"].is_null());
    CHECK(pj["fraction_a"] == "2/5");
    Certificate pback = certificate_from_json(pj);
    CHECK(pback.set_a.to_vector() == std::vector<int>{0, 2});
}

TEST_CASE("wrong kind tags and broken schemas throw") {
    nlohmann::json j = {{"kind", "nonsense"}, {"set_a", {0}},       {"set_b", {1}},
                        {"shape", nullptr},   {"embedding", nullptr}, {"fraction_a", "0/1"},
                        {"fraction_b", "0/1"}};
    CHECK_THROWS_AS(certificate_from_json(j), MalformedCertificateError);
    nlohmann::json missing = {{"kind", "anti_pair"}};
    CHECK_THROWS_AS(certificate_from_json(missing), MalformedCertificateError);
}

}  // TEST_SUITE
