#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eh/algorithms.hpp"
#include "eh/caterpillar.hpp"
#include "eh/certificate.hpp"
#include "eh/graph.hpp"
#include "eh/rational.hpp"

namespace eh {

// Exact-rational constant schedule for a target shape. Level d' holds
// (ell0(h,d'), alpha(h,d')) with
//   ell0(h,0)  = h + 2,
//   ell0(h,d') = h + ell0(h,d'-1) * ((d'+1)^{h+1} + 1),
//   alpha(h,0) = 3^{-ell0(h,0)} / 10,
//   alpha(h,d')= 3^{-ell0(h,d')} * alpha(h,d'-1) / 10,
// and eps chosen to satisfy 10*h*d*t*2^{hd}*ell*eps < alpha.
struct ConstantSchedule {
    CaterpillarShape shape;
    struct Level {
        int d = 0;
        BigInt ell0;
        Rational alpha;
    };
    std::vector<Level> levels;  // d' = 0..shape.d
    Rational eps;
    bool experimental = false;  // overridden ell/eps

    BigInt ell() const { return levels.back().ell0; }
    Rational alpha() const { return levels.back().alpha; }
};

ConstantSchedule constants(CaterpillarShape shape);
// Schedule JSON, including the minimum n at which each threshold stops being
// vacuous.
nlohmann::ordered_json schedule_to_json(const ConstantSchedule& s);

// Sparsification result: a verified near-clean side under one polarity, a
// pattern witness found en route, or an honest diagnostic.
struct CleanSide {
    VertexSet subset;
    bool complemented = false;
};
struct SparsifyWitness {
    Embedding embedding;
    bool complemented = false;  // pattern found in complement(g0)
};
struct SparsifyDiagnostic {
    std::string message;
    std::size_t best_size = 0;       // largest subset meeting the degree bound
    bool best_complemented = false;
    std::size_t degree_excess = 0;   // max degree minus allowance at the floor size
};
using SparsifyResult = std::variant<CleanSide, SparsifyWitness, SparsifyDiagnostic>;

// Searches for the pattern (and its complement) under a node budget, then
// peels vertices by min(degree, co-degree) tracking the best suffix under
// each polarity, with an exhaustive subset sweep for n <= 18 as a fallback.
// Any returned clean side is re-verified: max degree <= eps_degree * |A|.
// min_size is the floor below which a clean side is useless to the caller.
SparsifyResult sparsify(const Graph& g0, const Rational& eps_degree, const Graph& pattern,
                        std::uint64_t budget = 200000, std::size_t min_size = 1,
                        bool parallel = false);

struct DichotomyOptions {
    std::uint64_t seed = 0;
    std::optional<long long> ell_override;
    std::optional<Rational> eps_override;
    std::uint64_t budget = 200000;
    bool parallel = false;
    // Step-by-step search trace consumer (JSON lines when verbose).
    std::function<void(const nlohmann::ordered_json&)> trace;
};

struct DichotomyOutcome {
    Certificate certificate;
    nlohmann::ordered_json report;
};

// End-to-end driver: shape the pattern, build the schedule, sparsify,
// colour, search, attach legs, translate through the polarity, and verify.
// Throws DiagnosticError (with diagnostics) when no certificate is reachable
// at this scale; never returns an unverified certificate.
DichotomyOutcome dichotomy(const Graph& g0, const Graph& pattern, const DichotomyOptions& opt);

}  // namespace eh
