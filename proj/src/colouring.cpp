#include "eh/colouring.hpp"

#include <numeric>

#include "eh/errors.hpp"
#include "eh/prng.hpp"

namespace eh {

ColouredGraph equipartition(std::shared_ptr<const Graph> g, int ell, std::uint64_t seed) {
    const std::size_t n = g->size();
    if (ell < 1) throw ParameterError("equipartition: l must be >= 1");
    if (n < static_cast<std::size_t>(ell))
        throw SizeError("equipartition: graph has " + std::to_string(n) +
                        " vertices, fewer than l = " + std::to_string(ell));

    const std::size_t keep = n - n % static_cast<std::size_t>(ell);
    std::vector<int> ids(keep);
    std::iota(ids.begin(), ids.end(), 0);  // survivors: all but the largest n mod l ids

    Prng rng(seed);
    rng.shuffle(ids);

    ColouredGraph cg;
    cg.graph = std::move(g);
    const std::size_t per = keep / static_cast<std::size_t>(ell);
    cg.classes.reserve(ell);
    for (int c = 0; c < ell; ++c) {
        VertexSet cls(n);
        for (std::size_t i = 0; i < per; ++i) cls.add(ids[static_cast<std::size_t>(c) * per + i]);
        cg.classes.push_back(std::move(cls));
    }
    return cg;
}

ColouredGraph equipartition(const Graph& g, int ell, std::uint64_t seed) {
    return equipartition(std::make_shared<Graph>(g), ell, seed);
}

}  // namespace eh
