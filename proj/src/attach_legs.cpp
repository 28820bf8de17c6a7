#include <stdexcept>

#include "eh/algorithms.hpp"
#include "eh/caterpillar.hpp"
#include "eh/errors.hpp"

namespace eh {

namespace {

Rational times_n(const Rational& eps, const BigInt& factor, std::size_t n) {
    return eps * Rational(factor * BigInt(n));
}

}  // namespace

std::variant<AntiPair, Embedding> attach_legs(const Graph& g, const JuniorCaterpillar& jc,
                                              CaterpillarShape shape, const Rational& eps,
                                              AttachTrace* trace) {
    if (!shape.valid()) throw ParameterError("attach_legs: invalid shape");
    const int h = shape.h, d = shape.d, t = shape.t;
    const std::size_t n = g.size();
    if (static_cast<int>(jc.path.size()) != h)
        throw PreconditionError("attach_legs: junior caterpillar path length != h");
    const Rational eps_n = eps * Rational(BigInt(n));
    if (Rational(BigInt(g.max_degree())) > eps_n)
        throw PreconditionError("attach_legs: max degree exceeds eps*n");

    const int legs = (d >= 1 && t >= 1) ? h * d : 0;
    const long long hdt = static_cast<long long>(h) * std::max(d, 1) * std::max(t, 1);

    auto assemble = [&](const std::vector<std::vector<int>>& leg_paths) {
        auto tpl = make_caterpillar(shape);
        Embedding e;
        e.map.assign(static_cast<std::size_t>(shape.vertex_count()), -1);
        for (int i = 0; i < h; ++i) e.map[i] = jc.path[i];
        for (int k = 1; k <= legs; ++k) {
            const int i = (k - 1) / d, j = (k - 1) % d;
            const int base = h + (i * d + j) * t;
            const auto& p = leg_paths[static_cast<std::size_t>(k - 1)];
            for (int pos = 0; pos < t; ++pos) e.map[base + pos] = p[static_cast<std::size_t>(pos) + 1];
        }
        if (auto why = check_induced_embedding(g, tpl.graph, e))
            throw DiagnosticError("attach_legs: assembled embedding is not induced (" + *why +
                                  "); was the junior caterpillar valid?");
        return e;
    };

    if (legs == 0) return assemble({});

    if (static_cast<int>(jc.buds.size()) != h)
        throw PreconditionError("attach_legs: bud matrix has wrong shape");
    for (const auto& row : jc.buds)
        if (static_cast<int>(row.size()) != d)
            throw PreconditionError("attach_legs: bud matrix has wrong shape");

    VertexSet path_set = VertexSet::from_vector(n, jc.path);
    VertexSet path_closed = g.closed_neighbourhood(path_set);

    // Ascending pass: grow B^k and carve C^k.
    std::vector<VertexSet> buds, closed, fresh;  // B^k, N[B^k], C^k (1-based at k-1)
    VertexSet earlier_closed(n);                 // union of N[B^j], j < k
    if (trace) trace->steps.assign(static_cast<std::size_t>(legs), {});
    for (int k = 1; k <= legs; ++k) {
        const int i = (k - 1) / d, j = (k - 1) % d;
        const int vk = jc.path[i];
        const BigInt scale = BigInt(10) * hdt * big_pow(2, static_cast<unsigned>(k));
        const Rational threshold = times_n(eps, scale, n);

        auto grown = grow_bud(g, jc.buds[i][j].vertices, vk, threshold, eps_n);
        if (std::holds_alternative<AntiPair>(grown)) return std::get<AntiPair>(grown);
        VertexSet bk = std::get<VertexSet>(std::move(grown));
        VertexSet nbk = g.closed_neighbourhood(bk);

        // Recheck the two-sided neighbourhood bounds before building on them.
        const Rational lower = times_n(eps, scale - 1, n);
        const Rational upper = times_n(eps, scale + 1, n);
        VertexSet open_nb = g.neighbourhood(bk);
        if (Rational(BigInt(open_nb.size())) < lower || Rational(BigInt(nbk.size())) > upper)
            throw DiagnosticError("attach_legs: bud " + std::to_string(k) +
                                  " neighbourhood bounds failed (|N(B)| = " +
                                  std::to_string(open_nb.size()) + ", |N[B]| = " +
                                  std::to_string(nbk.size()) + ")");

        VertexSet ck = open_nb - earlier_closed - path_closed;
        if (Rational(BigInt(ck.size())) < times_n(eps, BigInt(9) * hdt, n))
            throw DiagnosticError("attach_legs: |C^" + std::to_string(k) + "| = " +
                                  std::to_string(ck.size()) +
                                  " below the 9*h*d*t*eps*n bound");

        earlier_closed |= nbk;
        if (trace) {
            auto& s = trace->steps[static_cast<std::size_t>(k - 1)];
            s.k = k;
            s.threshold = threshold;
            s.bud = bk;
            s.closed_nbhd = nbk;
            s.c_set = ck;
        }
        buds.push_back(std::move(bk));
        closed.push_back(std::move(nbk));
        fresh.push_back(std::move(ck));
    }

    // Descending pass: grow leg paths inside D^k.
    std::vector<std::vector<int>> leg_paths(static_cast<std::size_t>(legs));
    VertexSet later_legs_closed(n);  // union of N[V(P^j) \ {v^j}], j > k
    for (int k = legs; k >= 1; --k) {
        const int i = (k - 1) / d;
        const int vk = jc.path[i];
        VertexSet dk = (buds[static_cast<std::size_t>(k - 1)] |
                        fresh[static_cast<std::size_t>(k - 1)]) -
                       later_legs_closed;
        dk.add(vk);
        if (Rational(BigInt(dk.size())) < times_n(eps, BigInt(8) * hdt, n))
            throw DiagnosticError("attach_legs: |D^" + std::to_string(k) + "| = " +
                                  std::to_string(dk.size()) +
                                  " below the 8*h*d*t*eps*n bound");

        const int delta = static_cast<int>(std::max<std::size_t>(1, g.max_degree_in(dk)));
        if (dk.size() <= static_cast<std::size_t>(t + 3) * static_cast<std::size_t>(delta))
            throw DiagnosticError("attach_legs: D^" + std::to_string(k) +
                                  " too small for the path-growing lemma");

        auto grown = path_grow_in(g, dk, vk, t + 1, delta);
        if (std::holds_alternative<AntiPair>(grown)) return std::get<AntiPair>(grown);
        auto leg = std::get<std::vector<int>>(std::move(grown));

        VertexSet leg_tail = VertexSet::from_vector(n, leg);
        leg_tail.remove(vk);
        later_legs_closed |= g.closed_neighbourhood(leg_tail);
        if (trace) {
            auto& s = trace->steps[static_cast<std::size_t>(k - 1)];
            s.d_set = dk;
            s.leg = leg;
        }
        leg_paths[static_cast<std::size_t>(k - 1)] = std::move(leg);
    }

    return assemble(leg_paths);
}

}  // namespace eh
