#include <algorithm>
#include <deque>
#include <stdexcept>

#include "eh/algorithms.hpp"
#include "eh/errors.hpp"

namespace eh {

namespace {

// Deepest root-to-leaf node path, h+1 nodes; ties towards smaller node index.
std::vector<int> deepest_path(const Fern& f, int h) {
    std::vector<int> sub_height(f.nodes.size(), 0);
    for (std::size_t i = f.nodes.size(); i-- > 1;) {
        int p = f.nodes[i].parent;
        sub_height[p] = std::max(sub_height[p], sub_height[i] + 1);
    }
    std::vector<int> path{0};
    while (static_cast<int>(path.size()) < h + 1) {
        int cur = path.back();
        int next = -1;
        for (int c : f.nodes[cur].children)
            if (next < 0 || sub_height[c] > sub_height[next]) next = c;
        if (next < 0) throw std::logic_error("fern_to_junior: deepest path ended early");
        path.push_back(next);
    }
    return path;
}

}  // namespace

JuniorCaterpillar fern_to_junior(const ColouredGraph& cg, const Fern& f, int h, int d) {
    if (f.arity != d + 1)
        throw PreconditionError("fern_to_junior: fern arity " + std::to_string(f.arity) +
                                ", expected d+1 = " + std::to_string(d + 1));
    if (f.height() < h)
        throw PreconditionError("fern_to_junior: fern height " + std::to_string(f.height()) +
                                " below h = " + std::to_string(h));

    const Graph& g = cg.g();
    std::vector<int> spine_nodes = deepest_path(f, h);

    JuniorCaterpillar jc;
    jc.path.resize(h);
    jc.buds.assign(h, {});
    for (int i = 0; i < h; ++i) {
        const VertexSet& bud = f.nodes[spine_nodes[i]].bud.vertices;
        if (i == 0) {
            jc.path[0] = bud.first();
        } else {
            // v_{i-1} has a neighbour in the child bud by the fern adjacency.
            VertexSet cands =
                VertexSet::from_bits(g.neighbours_bits(jc.path[i - 1]) & bud.bits());
            if (cands.empty())
                throw std::logic_error("fern_to_junior: parent vertex lost its child neighbour");
            jc.path[i] = cands.first();
        }
        for (int c : f.nodes[spine_nodes[i]].children)
            if (c != spine_nodes[i + 1]) jc.buds[i].push_back(f.nodes[c].bud);
        if (static_cast<int>(jc.buds[i].size()) != d)
            throw std::logic_error("fern_to_junior: sibling bud count mismatch");
    }
    return jc;
}

namespace {

struct Searcher {
    const ColouredGraph& cg;
    const Graph& g;
    int h;
    int d;
    Rational alpha;
    const SearchObserver& observer;
    int depth;

    SearchState st;

    Searcher(const ColouredGraph& cg_, int h_, int d_, Rational alpha_,
             const SearchObserver& obs, int depth_)
        : cg(cg_), g(cg_.g()), h(h_), d(d_), alpha(std::move(alpha_)), observer(obs),
          depth(depth_) {}

    void emit() {
        if (observer) observer(depth, st, cg, alpha, d);
    }

    bool stopped() const {
        if (st.active.size() == 1) return true;
        for (int i : st.active) {
            std::size_t f = st.families.at(i).size();
            if (f == 0 || f >= static_cast<std::size_t>(d) + 1) return false;
        }
        return true;
    }

    int pick_a() const {
        for (int i : st.active)
            if (st.families.at(i).size() == static_cast<std::size_t>(d) + 1) return i;
        for (int i : st.active)
            if (st.families.at(i).empty()) return i;
        throw std::logic_error("junior_search: no admissible family index");
    }

    // Wraps the ferns of family a under a new root bud A (witness colour b).
    Fern wrap_fern(int a, VertexSet A, int b) {
        Fern out;
        out.arity = d + 1;
        Fern::Node root;
        root.parent = -1;
        root.bud = Bud{std::move(A), b};
        out.nodes.push_back(std::move(root));
        for (const Fern& f : st.families.at(a)) {
            int offset = static_cast<int>(out.nodes.size());
            for (std::size_t i = 0; i < f.nodes.size(); ++i) {
                Fern::Node nd = f.nodes[i];
                nd.parent = i == 0 ? 0 : nd.parent + offset;
                for (int& c : nd.children) c += offset;
                out.nodes.push_back(std::move(nd));
            }
            out.nodes[0].children.push_back(offset);
        }
        return out;
    }

    // Minimal connected A ⊆ A0 in BFS order from the smallest id; stops as
    // soon as some other active class b has |N(A) ∩ W_b| >= |W_b|/3.
    std::pair<VertexSet, int> grow_minimal(int a, const VertexSet& A0) {
        VertexSet A(g.size());
        VertexSet NA(g.size());
        std::vector<std::size_t> cover(cg.classes.size(), 0);

        std::deque<int> queue{A0.first()};
        VertexSet discovered(g.size(), {A0.first()});
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            A.add(u);
            VertexSet fresh = VertexSet::from_bits(g.neighbours_bits(u) - NA.bits());
            NA |= fresh;
            for (int i : st.active) {
                if (i == a) continue;
                cover[i] += (fresh & st.working.at(i)).size();
            }
            for (int i : st.active) {
                if (i == a) continue;
                if (3 * cover[i] >= st.working.at(i).size()) return {A, i};
            }
            VertexSet nbrs = VertexSet::from_bits(g.neighbours_bits(u) & A0.bits());
            nbrs -= discovered;
            nbrs.for_each([&](int w) {
                discovered.add(w);
                queue.push_back(w);
            });
        }
        throw std::logic_error("junior_search: minimal subset growth never hit a third");
    }

    std::variant<AntiPair, JuniorCaterpillar> run() {
        const std::size_t ell = cg.classes.size();
        for (std::size_t i = 0; i < ell; ++i) {
            st.active.push_back(static_cast<int>(i));
            st.working[static_cast<int>(i)] = cg.classes[i];
            st.families[static_cast<int>(i)] = {};
        }
        emit();

        while (!stopped()) {
            int a = pick_a();
            const VertexSet& Wa = st.working.at(a);
            if (Wa.empty())
                throw DiagnosticError("junior_search: working set emptied (overridden constants "
                                      "below the schedule?)");
            VertexSet A0 = largest_component(g, Wa);
            if (2 * A0.size() <= Wa.size()) return AntiPair{A0, Wa - A0};

            VertexSet NA0 = g.neighbourhood(A0);
            for (int i : st.active) {
                if (i == a) continue;
                const VertexSet& Wi = st.working.at(i);
                VertexSet covered = NA0 & Wi;
                if (2 * covered.size() < Wi.size()) return AntiPair{A0, Wi - covered};
            }

            auto [A, b] = grow_minimal(a, A0);
            Fern fa = wrap_fern(a, A, b);
            VertexSet NA = g.neighbourhood(A);

            st.active.erase(std::find(st.active.begin(), st.active.end(), a));
            st.families.erase(a);
            st.working.erase(a);
            for (int i : st.active) {
                if (i == b)
                    st.working.at(i) &= NA;
                else
                    st.working.at(i) -= NA;
            }
            st.families.at(b).push_back(std::move(fa));
            ++st.k;
            emit();
        }

        // A fern of height >= h converts directly.
        for (int i : st.active)
            for (const Fern& f : st.families.at(i))
                if (f.height() >= h) {
                    JuniorCaterpillar jc = fern_to_junior(cg, f, h, d);
                    if (auto check = validate_junior(cg, jc, alpha, h, d); !check.ok)
                        throw DiagnosticError("junior_search: converted fern failed junior "
                                              "validation (alpha override too large?): " +
                                              check.reason);
                    return jc;
                }

        if (d == 0)
            throw DiagnosticError("junior_search: no fern reached height " + std::to_string(h) +
                                  " at d = 0; colour count is below the schedule");

        // Recurse with d-1 on ell' surviving working sets.
        BigInt denom = big_pow(static_cast<unsigned>(d + 1), static_cast<unsigned>(h + 1)) + 1;
        BigInt ellp_big = (BigInt(ell) - h) / denom;
        if (ellp_big < 1)
            throw DiagnosticError("junior_search: too few colours to recurse (need ell > h + "
                                  "(d+1)^(h+1) + 1)");
        std::size_t ellp = static_cast<std::size_t>(ellp_big.convert_to<unsigned long long>());
        if (st.active.size() < ellp)
            throw std::logic_error("junior_search: fewer surviving classes than the recursion "
                                   "bound allows");

        std::vector<int> chosen(st.active.begin(),
                                st.active.begin() + static_cast<std::ptrdiff_t>(ellp));
        ColouredGraph sub;
        sub.graph = cg.graph;
        for (int i : chosen) sub.classes.push_back(st.working.at(i));

        Rational alpha_sub = alpha * 10 * Rational(big_pow(3, static_cast<unsigned>(ell)));
        Searcher inner(sub, h, d - 1, alpha_sub, observer, depth + 1);
        auto result = inner.run();
        if (std::holds_alternative<AntiPair>(result)) return result;
        JuniorCaterpillar jc = std::get<JuniorCaterpillar>(std::move(result));

        // The d-th private bud of v_i is the root bud of a fern growing on
        // v_i's surviving class.
        for (int i = 0; i < h; ++i) {
            int cls = -1;
            for (int c : chosen)
                if (st.working.at(c).contains(jc.path[i])) cls = c;
            if (cls < 0 || st.families.at(cls).empty())
                throw DiagnosticError("junior_search: no fern available to extend path vertex " +
                                      std::to_string(i));
            jc.buds[i].push_back(st.families.at(cls).front().nodes[0].bud);
        }
        if (auto check = validate_junior(cg, jc, alpha, h, d); !check.ok)
            throw DiagnosticError("junior_search: assembled junior caterpillar failed "
                                  "validation: " + check.reason);
        return jc;
    }
};

}  // namespace

std::variant<AntiPair, JuniorCaterpillar> junior_search(const ColouredGraph& cg, int h, int d,
                                                        const Rational& alpha,
                                                        const SearchObserver& observer) {
    if (h < 1 || d < 0) throw ParameterError("junior_search: need h >= 1, d >= 0");
    if (alpha <= 0) throw ParameterError("junior_search: alpha must be positive");
    if (cg.classes.empty()) throw PreconditionError("junior_search: no colour classes");
    for (const auto& c : cg.classes)
        if (c.empty()) throw PreconditionError("junior_search: empty colour class");
    Searcher s(cg, h, d, alpha, observer, 0);
    return s.run();
}

std::optional<std::string> check_search_invariants(const ColouredGraph& cg,
                                                   const SearchState& state,
                                                   const Rational& alpha, int d) {
    const Graph& g = cg.g();
    const BigInt three_k = big_pow(3, static_cast<unsigned>(state.k));

    // P1: |W_i| >= 3^-k |V_i|
    for (int i : state.active) {
        BigInt w{state.working.at(i).size()};
        BigInt v{cg.classes[static_cast<std::size_t>(i)].size()};
        if (three_k * w < v)
            return "P1 violated for class " + std::to_string(i) + " at k = " +
                   std::to_string(state.k);
    }

    // P2: stored ferns validate and grow on their working sets.
    for (const auto& [i, fs] : state.families)
        for (const Fern& f : fs) {
            if (auto r = validate_fern(cg, f, alpha); !r.ok)
                return "P2 violated: fern in family " + std::to_string(i) +
                       " invalid: " + r.reason;
            if (!grows_on(cg, f, state.working.at(i)))
                return "P2 violated: fern does not grow on W_" + std::to_string(i);
        }

    // P3: k buds total; buds plus working sets colour-compatible.
    if (state.total_buds() != static_cast<std::size_t>(state.k))
        return "P3 violated: bud count " + std::to_string(state.total_buds()) + " != k";
    std::vector<const VertexSet*> family;
    for (const auto& [i, fs] : state.families)
        for (const Fern& f : fs)
            for (const auto& nd : f.nodes) family.push_back(&nd.bud.vertices);
    for (int i : state.active) family.push_back(&state.working.at(i));
    if (!is_colour_compatible(family, cg)) return "P3 violated: colour compatibility";

    // P4: working sets vs foreign buds.
    for (int i : state.active)
        for (const auto& [j, fs] : state.families) {
            if (j == i) continue;
            for (const Fern& f : fs)
                for (const auto& nd : f.nodes)
                    if (!g.anti_adjacent(state.working.at(i), nd.bud.vertices))
                        return "P4 violated between W_" + std::to_string(i) +
                               " and a bud of family " + std::to_string(j);
        }

    // P5: distinct ferns pairwise anti-adjacent.
    std::vector<VertexSet> fern_sets;
    for (const auto& [i, fs] : state.families)
        for (const Fern& f : fs) fern_sets.push_back(f.vertex_union(g.size()));
    for (std::size_t x = 0; x < fern_sets.size(); ++x)
        for (std::size_t y = x + 1; y < fern_sets.size(); ++y)
            if (!g.anti_adjacent(fern_sets[x], fern_sets[y]))
                return "P5 violated between two ferns";

    // P6: family sizes.
    int full = 0;
    for (const auto& [i, fs] : state.families) {
        if (fs.size() > static_cast<std::size_t>(d) + 1)
            return "P6 violated: family " + std::to_string(i) + " too large";
        if (fs.size() == static_cast<std::size_t>(d) + 1) ++full;
    }
    if (full > 1) return "P6 violated: two full families";

    return std::nullopt;
}

}  // namespace eh
