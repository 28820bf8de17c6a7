#include "eh/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace eh {

namespace {

struct Backtracker {
    const Graph& host;
    const Graph& pattern;
    std::uint64_t budget;
    bool exhausted = false;

    std::vector<int> order;     // pattern vertices, descending degree
    std::vector<int> assign;    // pattern vertex -> host vertex or -1
    std::vector<char> used;     // host vertex taken

    Backtracker(const Graph& h, const Graph& p, std::uint64_t b)
        : host(h), pattern(p), budget(b), assign(p.size(), -1), used(h.size(), 0) {
        order.resize(pattern.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
            return pattern.degree(a) > pattern.degree(c);
        });
    }

    bool consistent(int pv, int hv, std::size_t depth) const {
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (std::size_t k = 0; k < depth; ++k) {
            int pu = order[k];
            if (pattern.adjacent(pv, pu) != host.adjacent(hv, assign[pu])) return false;
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        if (budget == 0) {
            exhausted = true;
            return false;
        }
        --budget;
        int pv = order[depth];
        for (std::size_t hv = 0; hv < host.size(); ++hv) {
            if (used[hv]) continue;
            if (!consistent(pv, static_cast<int>(hv), depth)) continue;
            assign[pv] = static_cast<int>(hv);
            used[hv] = 1;
            if (search(depth + 1)) return true;
            used[hv] = 0;
            assign[pv] = -1;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

BudgetedSearch find_induced_budgeted(const Graph& host, const Graph& pattern,
                                     std::uint64_t node_budget) {
    if (pattern.size() == 0 || pattern.size() > host.size()) return {std::nullopt, false};
    Backtracker bt(host, pattern, node_budget);
    if (bt.search(0)) {
        Embedding e;
        e.map = bt.assign;
        return {std::move(e), false};
    }
    return {std::nullopt, bt.exhausted};
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    return find_induced_budgeted(host, pattern, UINT64_MAX).embedding;
}

std::optional<Embedding> find_induced_naive(const Graph& host, const Graph& pattern) {
    if (host.size() > 10)
        throw SizeError("find_induced_naive: host has " + std::to_string(host.size()) +
                        " vertices, cap is 10");
    if (pattern.size() == 0 || pattern.size() > host.size()) return std::nullopt;

    const std::size_t p = pattern.size();
    std::vector<int> assign(p, -1);
    std::vector<char> used(host.size(), 0);

    // Plain exhaustive walk over injective maps in lexicographic order.
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == p) return true;
        for (std::size_t hv = 0; hv < host.size(); ++hv) {
            if (used[hv]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = pattern.adjacent(static_cast<int>(i), static_cast<int>(j)) ==
                     host.adjacent(static_cast<int>(hv), assign[j]);
            if (!ok) continue;
            assign[i] = static_cast<int>(hv);
            used[hv] = 1;
            if (self(self, i + 1)) return true;
            used[hv] = 0;
            assign[i] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) {
        Embedding e;
        e.map = assign;
        return e;
    }
    return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> max_anti_pair_bruteforce(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 20)
        throw SizeError("max_anti_pair_bruteforce: n = " + std::to_string(n) + ", cap is 20");
    if (n < 2) return std::nullopt;

    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                adj[u] |= (1u << v);

    auto components = [&](std::uint32_t s) {
        std::vector<std::uint32_t> comps;
        std::uint32_t left = s;
        while (left) {
            std::uint32_t seed = left & (~left + 1u);
            std::uint32_t comp = seed, frontier = seed;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f;) {
                    unsigned v = static_cast<unsigned>(__builtin_ctz(f));
                    f &= f - 1;
                    next |= adj[v];
                }
                next &= s;
                next &= ~comp;
                comp |= next;
                frontier = next;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    };

    int best_min = 0;
    std::uint32_t best_a = 0, best_b = 0;
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t s = 3; s <= all; ++s) {
        if (__builtin_popcount(s) < 2) continue;
        auto comps = components(s);
        if (comps.size() < 2) continue;

        // Subset-sum over component sizes: the best side A is the achievable
        // sum closest to |S|/2 from below (min(|A|,|B|) is then maximal).
        const int total = __builtin_popcount(s);
        std::vector<int> dp(total + 1, -1);  // dp[sum] = component subset achieving it
        dp[0] = 0;
        std::vector<int> sizes(comps.size());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            sizes[c] = __builtin_popcount(comps[c]);
            for (int sum = total; sum >= sizes[c]; --sum)
                if (dp[sum] < 0 && dp[sum - sizes[c]] >= 0)
                    dp[sum] = dp[sum - sizes[c]] | (1 << c);
        }
        for (int sum = total / 2; sum >= 1; --sum) {
            if (dp[sum] < 0) continue;
            int mn = std::min(sum, total - sum);
            if (total - sum < 1) continue;
            if (mn > best_min) {
                best_min = mn;
                std::uint32_t a = 0;
                for (std::size_t c = 0; c < comps.size(); ++c)
                    if (dp[sum] & (1 << c)) a |= comps[c];
                best_a = a;
                best_b = s & ~a;
            }
            break;  // sums below total/2 only lower the min
        }
    }

    if (best_min == 0) return std::nullopt;
    VertexSet a(n), b(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (best_a & (1u << v)) a.add(static_cast<int>(v));
        if (best_b & (1u << v)) b.add(static_cast<int>(v));
    }
    return std::make_pair(std::move(a), std::move(b));
}

}  // namespace eh
