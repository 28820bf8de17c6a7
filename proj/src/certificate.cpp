#include "eh/certificate.hpp"

#include <algorithm>

namespace eh {

std::string to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::anti_pair: return "anti_pair";
        case CertificateKind::full_pair: return "full_pair";
        case CertificateKind::induced_pattern: return "induced_pattern";
        case CertificateKind::induced_pattern_complement: return "induced_pattern_complement";
    }
    throw std::logic_error("unreachable certificate kind");
}

CertificateKind certificate_kind_from_string(const std::string& s) {
    if (s == "anti_pair") return CertificateKind::anti_pair;
    if (s == "full_pair") return CertificateKind::full_pair;
    if (s == "induced_pattern") return CertificateKind::induced_pattern;
    if (s == "induced_pattern_complement") return CertificateKind::induced_pattern_complement;
    throw MalformedCertificateError("unknown certificate kind '" + s + "'");
}

Certificate Certificate::pair(CertificateKind kind, VertexSet a, VertexSet b, std::size_t n) {
    Certificate c;
    c.kind = kind;
    c.fraction_a = n ? Rational(BigInt(a.size()), BigInt(n)) : Rational(0);
    c.fraction_b = n ? Rational(BigInt(b.size()), BigInt(n)) : Rational(0);
    c.set_a = std::move(a);
    c.set_b = std::move(b);
    return c;
}

Certificate Certificate::pattern(CertificateKind kind, CaterpillarShape shape, Embedding e,
                                 std::size_t n) {
    Certificate c;
    c.kind = kind;
    c.set_a = VertexSet(n);
    c.set_b = VertexSet(n);
    c.shape = shape;
    c.embedding = std::move(e);
    return c;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(c.kind);
    j["set_a"] = c.set_a.to_vector();
    j["set_b"] = c.set_b.to_vector();
    if (c.shape)
        j["shape"] = {{"h", c.shape->h}, {"d", c.shape->d}, {"t", c.shape->t}};
    else
        j["shape"] = nullptr;
    if (c.embedding) {
        nlohmann::ordered_json m = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < c.embedding->map.size(); ++i)
            m[std::to_string(i)] = c.embedding->map[i];
        j["embedding"] = std::move(m);
    } else {
        j["embedding"] = nullptr;
    }
    j["fraction_a"] = to_fraction_string(c.fraction_a);
    j["fraction_b"] = to_fraction_string(c.fraction_b);
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    auto need = [&](const char* key) -> const nlohmann::json& {
        auto it = j.find(key);
        if (it == j.end())
            throw MalformedCertificateError(std::string("certificate missing key '") + key + "'");
        return *it;
    };
    try {
        Certificate c;
        c.kind = certificate_kind_from_string(need("kind").get<std::string>());

        auto ids = [&](const nlohmann::json& arr) {
            std::vector<int> out;
            for (const auto& x : arr) out.push_back(x.get<int>());
            return out;
        };
        auto va = ids(need("set_a"));
        auto vb = ids(need("set_b"));
        // Universe is unknown until verification; size sets generously.
        int max_id = -1;
        for (int v : va) max_id = std::max(max_id, v);
        for (int v : vb) max_id = std::max(max_id, v);

        const auto& jshape = need("shape");
        if (!jshape.is_null())
            c.shape = CaterpillarShape{jshape.at("h").get<int>(), jshape.at("d").get<int>(),
                                       jshape.at("t").get<int>()};
        const auto& jemb = need("embedding");
        if (!jemb.is_null()) {
            std::size_t count = jemb.size();
            Embedding e;
            e.map.assign(count, -1);
            for (auto it = jemb.begin(); it != jemb.end(); ++it) {
                std::size_t idx = std::stoul(it.key());
                if (idx >= count)
                    throw MalformedCertificateError("embedding keys are not 0..k-1");
                e.map[idx] = it.value().get<int>();
                max_id = std::max(max_id, e.map[idx]);
            }
            c.embedding = std::move(e);
        }
        c.set_a = VertexSet::from_vector(static_cast<std::size_t>(max_id + 1), va);
        c.set_b = VertexSet::from_vector(static_cast<std::size_t>(max_id + 1), vb);
        c.fraction_a = parse_fraction(need("fraction_a").get<std::string>());
        c.fraction_b = parse_fraction(need("fraction_b").get<std::string>());
        return c;
    } catch (const nlohmann::json::exception& ex) {
        throw MalformedCertificateError(std::string("certificate schema violation: ") + ex.what());
    } catch (const std::invalid_argument&) {
        throw MalformedCertificateError("certificate embedding key is not an integer");
    } catch (const std::out_of_range&) {
        throw MalformedCertificateError("certificate embedding key out of range");
    }
}

namespace {

CheckResult verify_pair(const Graph& g0, const Certificate& c) {
    const bool want_edges = c.kind == CertificateKind::full_pair;
    if (c.set_a.empty()) return CheckResult::fail("set_a is empty");
    if (c.set_b.empty()) return CheckResult::fail("set_b is empty");
    if (c.set_a.intersects(c.set_b)) {
        int v = (c.set_a & c.set_b).first();
        return CheckResult::fail("sets intersect at vertex " + std::to_string(v));
    }
    CheckResult r = CheckResult::pass();
    c.set_a.for_each([&](int u) {
        if (!r.ok) return;
        if (want_edges) {
            if (!c.set_b.bits().is_subset_of(g0.neighbours_bits(u))) {
                int v = VertexSet::from_bits(c.set_b.bits() - g0.neighbours_bits(u)).first();
                r = CheckResult::fail("missing edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")");
            }
        } else {
            if (g0.neighbours_bits(u).intersects(c.set_b.bits())) {
                int v = VertexSet::from_bits(g0.neighbours_bits(u) & c.set_b.bits()).first();
                r = CheckResult::fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") present between set_a and set_b");
            }
        }
    });
    return r;
}

CheckResult verify_pattern(const Graph& g0, const Certificate& c) {
    if (!c.shape) return CheckResult::fail("pattern certificate without shape");
    if (!c.shape->valid()) return CheckResult::fail("invalid shape parameters");
    if (!c.embedding) return CheckResult::fail("pattern certificate without embedding");
    if (!c.set_a.empty() || !c.set_b.empty())
        return CheckResult::fail("pattern certificate carries nonempty vertex sets");

    auto tpl = make_caterpillar(*c.shape);
    const bool complemented = c.kind == CertificateKind::induced_pattern_complement;
    const Graph host = complemented ? complement(g0) : g0;
    if (auto why = check_induced_embedding(host, tpl.graph, *c.embedding))
        return CheckResult::fail((complemented ? "in complement: " : "") + *why);
    return CheckResult::pass();
}

}  // namespace

CheckResult verify_certificate(const Graph& g0, const Certificate& cert) {
    const std::size_t n = g0.size();
    // Re-home the sets into the graph's universe; out-of-range ids are a
    // malformed certificate, not a mere verification failure.
    auto rehome = [&](const VertexSet& s, const char* name) {
        VertexSet out(n);
        s.for_each([&](int v) {
            if (static_cast<std::size_t>(v) >= n)
                throw MalformedCertificateError(std::string(name) + " references vertex " +
                                                std::to_string(v) + " outside the graph");
            out.add(v);
        });
        return out;
    };
    Certificate c = cert;
    c.set_a = rehome(cert.set_a, "set_a");
    c.set_b = rehome(cert.set_b, "set_b");
    if (c.embedding)
        for (int v : c.embedding->map)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw MalformedCertificateError("embedding references vertex " +
                                                std::to_string(v) + " outside the graph");

    CheckResult r;
    switch (c.kind) {
        case CertificateKind::anti_pair:
        case CertificateKind::full_pair:
            r = verify_pair(g0, c);
            break;
        case CertificateKind::induced_pattern:
        case CertificateKind::induced_pattern_complement:
            r = verify_pattern(g0, c);
            break;
    }
    if (!r.ok) return r;

    if (n > 0) {
        if (c.fraction_a != Rational(BigInt(c.set_a.size()), BigInt(n)))
            return CheckResult::fail("fraction_a does not equal |set_a|/n");
        if (c.fraction_b != Rational(BigInt(c.set_b.size()), BigInt(n)))
            return CheckResult::fail("fraction_b does not equal |set_b|/n");
    }
    return CheckResult::pass();
}

}  // namespace eh
