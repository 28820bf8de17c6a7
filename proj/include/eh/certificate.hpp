#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "eh/caterpillar.hpp"
#include "eh/embedding.hpp"
#include "eh/errors.hpp"
#include "eh/graph.hpp"
#include "eh/rational.hpp"

namespace eh {

enum class CertificateKind {
    anti_pair,                   // E(A,B) empty in the input graph
    full_pair,                   // E(A,B) = A x B
    induced_pattern,             // caterpillar embeds induced into the input
    induced_pattern_complement,  // ... into its complement
};

std::string to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

// One dichotomy output with everything needed for independent verification.
// Pair kinds carry set_a/set_b; pattern kinds carry shape + embedding.
// Fractions are the achieved |set|/n as exact rationals (0/1 for pattern
// kinds).
struct Certificate {
    CertificateKind kind = CertificateKind::anti_pair;
    VertexSet set_a;
    VertexSet set_b;
    std::optional<CaterpillarShape> shape;
    std::optional<Embedding> embedding;
    Rational fraction_a = 0;
    Rational fraction_b = 0;

    static Certificate pair(CertificateKind kind, VertexSet a, VertexSet b, std::size_t n);
    static Certificate pattern(CertificateKind kind, CaterpillarShape shape, Embedding e,
                               std::size_t n);
};

nlohmann::ordered_json certificate_to_json(const Certificate& c);
// Throws MalformedCertificateError on schema violations.
Certificate certificate_from_json(const nlohmann::json& j);

// True iff the certificate's invariants hold against g0 exactly; on failure
// the reason pinpoints the first violated constraint. Out-of-range ids throw
// MalformedCertificateError.
CheckResult verify_certificate(const Graph& g0, const Certificate& cert);

}  // namespace eh
