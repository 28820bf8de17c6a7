#include "eh/pipeline.hpp"

#include <algorithm>
#include <future>

#include "eh/colouring.hpp"
#include "eh/errors.hpp"
#include "eh/oracle.hpp"

namespace eh {

namespace {

BigInt ceil_rational(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (num >= 0) return BigInt((num + den - 1) / den);
    return BigInt(num / den);
}

constexpr unsigned kMaxScheduleExponent = 5'000'000;

}  // namespace

ConstantSchedule constants(CaterpillarShape shape) {
    if (!shape.valid()) throw ParameterError("constants: invalid shape");
    const int h = shape.h, d = shape.d;

    ConstantSchedule s;
    s.shape = shape;
    Rational alpha_prev = 1;  // the d = 0 base takes alpha' = 1
    BigInt ell_prev = 0;
    for (int level = 0; level <= d; ++level) {
        BigInt ell0;
        if (level == 0) {
            ell0 = h + 2;
        } else {
            BigInt fan = big_pow(static_cast<unsigned>(level + 1), static_cast<unsigned>(h + 1));
            ell0 = h + ell_prev * (fan + 1);
        }
        if (ell0 > kMaxScheduleExponent)
            throw ParameterError("constants: schedule exponent 3^" + ell0.str() +
                                 " too large to materialize");
        Rational alpha =
            alpha_prev / Rational(BigInt(10) * big_pow(3, ell0.convert_to<unsigned>()));
        s.levels.push_back({level, ell0, alpha});
        alpha_prev = alpha;
        ell_prev = ell0;
    }

    const BigInt m = BigInt(std::max(1, h * shape.d * shape.t));
    const BigInt two_hd = big_pow(2, static_cast<unsigned>(std::min(h * d, 4000)));
    s.eps = s.alpha() / Rational(BigInt(20) * m * two_hd * s.ell());
    return s;
}

nlohmann::ordered_json schedule_to_json(const ConstantSchedule& s) {
    nlohmann::ordered_json j;
    j["shape"] = {{"h", s.shape.h}, {"d", s.shape.d}, {"t", s.shape.t}};
    auto levels = nlohmann::ordered_json::array();
    for (const auto& lv : s.levels) {
        // n below which alpha * |V_i| < 1, i.e. the bud bound is vacuous.
        BigInt min_n = ceil_rational(Rational(lv.ell0) / lv.alpha);
        levels.push_back({{"d", lv.d},
                          {"ell0", lv.ell0.str()},
                          {"alpha", to_fraction_string(lv.alpha)},
                          {"min_n_for_alpha_bound", min_n.str()}});
    }
    j["levels"] = std::move(levels);
    j["ell"] = s.ell().str();
    j["alpha"] = to_fraction_string(s.alpha());
    j["eps"] = to_fraction_string(s.eps);
    j["min_n_for_eps_bound"] = ceil_rational(1 / s.eps).str();
    j["experimental"] = s.experimental;
    return j;
}

namespace {

struct PeelRecord {
    std::vector<int> removal_order;
    // For suffix of size sz (index sz), max degree under each polarity.
    std::vector<std::size_t> maxdeg_orig;
    std::vector<std::size_t> maxdeg_comp;
};

PeelRecord peel(const Graph& g) {
    const std::size_t n = g.size();
    PeelRecord rec;
    rec.maxdeg_orig.assign(n + 1, 0);
    rec.maxdeg_comp.assign(n + 1, 0);

    std::vector<std::size_t> deg(n);
    VertexSet remaining = VertexSet::full(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<int>(v));

    for (std::size_t sz = n; sz >= 1; --sz) {
        std::size_t mx_o = 0, mx_c = 0;
        int peel_v = -1;
        std::size_t peel_key = 0;
        remaining.for_each([&](int v) {
            std::size_t dc = sz - 1 - deg[v];
            mx_o = std::max(mx_o, deg[v]);
            mx_c = std::max(mx_c, dc);
            std::size_t key = std::min(deg[v], dc);
            if (peel_v < 0 || key > peel_key) {
                peel_v = v;
                peel_key = key;
            }
        });
        rec.maxdeg_orig[sz] = mx_o;
        rec.maxdeg_comp[sz] = mx_c;
        remaining.remove(peel_v);
        VertexSet nbrs = VertexSet::from_bits(g.neighbours_bits(peel_v) & remaining.bits());
        nbrs.for_each([&](int u) { --deg[u]; });
        rec.removal_order.push_back(peel_v);
    }
    return rec;
}

bool degree_ok(std::size_t maxdeg, const Rational& eps_degree, std::size_t size) {
    return Rational(BigInt(maxdeg)) <= eps_degree * Rational(BigInt(size));
}

// Largest subset (any) meeting the degree bound under some polarity, found
// by exhaustive sweep. Usable only for small n.
std::optional<CleanSide> exhaustive_clean(const Graph& g, const Rational& eps_degree,
                                          std::size_t min_size) {
    const std::size_t n = g.size();
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                adj[u] |= 1u << v;

    std::optional<CleanSide> best;
    std::size_t best_size = min_size - 1;
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t s = 1; s <= all; ++s) {
        std::size_t sz = static_cast<std::size_t>(__builtin_popcount(s));
        if (sz <= best_size) continue;
        std::size_t mx_o = 0, mx_c = 0;
        for (std::uint32_t rest = s; rest;) {
            unsigned v = static_cast<unsigned>(__builtin_ctz(rest));
            rest &= rest - 1;
            std::size_t dv = static_cast<std::size_t>(__builtin_popcount(adj[v] & s));
            mx_o = std::max(mx_o, dv);
            mx_c = std::max(mx_c, sz - 1 - dv);
        }
        bool ok_o = degree_ok(mx_o, eps_degree, sz);
        bool ok_c = degree_ok(mx_c, eps_degree, sz);
        if (ok_o || ok_c) {
            VertexSet sub(n);
            for (std::size_t v = 0; v < n; ++v)
                if (s & (1u << v)) sub.add(static_cast<int>(v));
            best = CleanSide{std::move(sub), !ok_o};
            best_size = sz;
        }
    }
    return best;
}

}  // namespace

SparsifyResult sparsify(const Graph& g0, const Rational& eps_degree, const Graph& pattern,
                        std::uint64_t budget, std::size_t min_size, bool parallel) {
    if (!(eps_degree > 0) || !(eps_degree < Rational(1, 2)))
        throw PreconditionError("sparsify: eps_degree must lie in (0, 1/2)");
    const std::size_t n = g0.size();
    if (min_size < 1) min_size = 1;

    // (a) budgeted pattern probes under both polarities.
    if (pattern.size() > 0 && pattern.size() <= n) {
        auto probe_orig = [&] { return find_induced_budgeted(g0, pattern, budget); };
        auto probe_comp = [&] { return find_induced_budgeted(complement(g0), pattern, budget); };
        BudgetedSearch r_orig, r_comp;
        if (parallel) {
            auto fut = std::async(std::launch::async, probe_comp);
            r_orig = probe_orig();
            r_comp = fut.get();
        } else {
            r_orig = probe_orig();
            r_comp = probe_comp();
        }
        if (r_orig.embedding) return SparsifyWitness{*std::move(r_orig.embedding), false};
        if (r_comp.embedding) return SparsifyWitness{*std::move(r_comp.embedding), true};
    }

    // (b) greedy peel, best suffix under each polarity.
    PeelRecord rec = peel(g0);
    std::size_t best_sz = 0;
    bool best_comp = false;
    std::size_t best_any_sz = 0;  // for diagnostics: ignores min_size
    bool best_any_comp = false;
    for (std::size_t sz = n; sz >= 1; --sz) {
        bool ok_o = degree_ok(rec.maxdeg_orig[sz], eps_degree, sz);
        bool ok_c = degree_ok(rec.maxdeg_comp[sz], eps_degree, sz);
        if ((ok_o || ok_c) && best_any_sz == 0) {
            best_any_sz = sz;
            best_any_comp = !ok_o;
        }
        if ((ok_o || ok_c) && sz >= min_size) {
            best_sz = sz;
            best_comp = !ok_o;
            break;
        }
    }

    if (best_sz == 0 && n <= 18) {
        if (auto side = exhaustive_clean(g0, eps_degree, min_size)) {
            const Graph host = side->complemented ? complement(g0) : g0;
            if (!degree_ok(host.max_degree_in(side->subset), eps_degree, side->subset.size()))
                throw std::logic_error("sparsify: exhaustive candidate failed recheck");
            return *side;
        }
    }

    if (best_sz >= min_size && best_sz > 0) {
        VertexSet subset = VertexSet::full(n);
        for (std::size_t i = 0; i < n - best_sz; ++i) subset.remove(rec.removal_order[i]);
        // Verified postcondition: never trust the bookkeeping.
        const Graph host = best_comp ? complement(g0) : g0;
        if (!degree_ok(host.max_degree_in(subset), eps_degree, best_sz))
            throw std::logic_error("sparsify: peel candidate failed max-degree recheck");
        return CleanSide{std::move(subset), best_comp};
    }

    SparsifyDiagnostic diag;
    diag.best_size = best_any_sz;
    diag.best_complemented = best_any_comp;
    if (min_size <= n) {
        std::size_t md = std::min(rec.maxdeg_orig[min_size], rec.maxdeg_comp[min_size]);
        BigInt allow = ceil_rational(eps_degree * Rational(BigInt(min_size)));
        BigInt excess = BigInt(md) - allow;
        diag.degree_excess = excess > 0 ? excess.convert_to<std::size_t>() : 0;
    }
    diag.message = "sparsify: no subset of size >= " + std::to_string(min_size) +
                   " met the degree bound; best verified subset has " +
                   std::to_string(best_any_sz) + " vertices (" +
                   (best_any_comp ? "complemented" : "original") + " polarity), degree excess " +
                   std::to_string(diag.degree_excess) + " at the floor size";
    return diag;
}

namespace {

VertexSet translate_set(const VertexSet& local, const std::vector<int>& ids, std::size_t n) {
    VertexSet out(n);
    local.for_each([&](int v) { out.add(ids[static_cast<std::size_t>(v)]); });
    return out;
}

Certificate make_pair_certificate(const AntiPair& p, bool complemented,
                                  const std::vector<int>& ids, std::size_t n) {
    VertexSet a = translate_set(p.a, ids, n);
    VertexSet b = translate_set(p.b, ids, n);
    return Certificate::pair(
        complemented ? CertificateKind::full_pair : CertificateKind::anti_pair, std::move(a),
        std::move(b), n);
}

}  // namespace

DichotomyOutcome dichotomy(const Graph& g0, const Graph& pattern, const DichotomyOptions& opt) {
    const std::size_t n = g0.size();
    if (n == 0) throw DiagnosticError("dichotomy: empty input graph");

    auto rec = is_caterpillar(pattern);
    if (!rec) throw PreconditionError("dichotomy: pattern is not a caterpillar");
    const CaterpillarShape shape = rec->shape;

    ConstantSchedule schedule = constants(shape);
    if (opt.ell_override || opt.eps_override) schedule.experimental = true;

    BigInt ell_big = opt.ell_override ? BigInt(*opt.ell_override) : schedule.ell();
    if (ell_big < 1) throw ParameterError("dichotomy: ell override must be >= 1");
    if (ell_big > BigInt(n))
        throw DiagnosticError(
            "dichotomy: colour count " + ell_big.str() + " exceeds n = " + std::to_string(n) +
            "; the schedule does not bind at this scale (use --ell/--eps overrides)");
    const std::size_t ell = ell_big.convert_to<std::size_t>();

    const Rational eps = opt.eps_override ? *opt.eps_override : schedule.eps;
    if (!(eps > 0)) throw ParameterError("dichotomy: eps must be positive");
    const Rational eps_degree = eps / Rational(BigInt(ell));
    if (!(eps_degree < Rational(1, 2)))
        throw ParameterError("dichotomy: eps/ell must be < 1/2");

    nlohmann::ordered_json report;
    report["schedule"] = schedule_to_json(schedule);
    if (schedule.experimental) {
        report["overrides"] = nlohmann::ordered_json::object();
        if (opt.ell_override) report["overrides"]["ell"] = *opt.ell_override;
        if (opt.eps_override) report["overrides"]["eps"] = to_fraction_string(eps);
    }

    auto finish = [&](Certificate cert, const char* stage, bool complemented) {
        auto check = verify_certificate(g0, cert);
        if (!check.ok)
            throw std::logic_error(std::string("dichotomy: internal verification failed at ") +
                                   stage + ": " + check.reason);
        report["polarity"] = complemented ? "complemented" : "original";
        report["stage_reached"] = stage;
        report["verified"] = true;
        return DichotomyOutcome{std::move(cert), std::move(report)};
    };

    // (3) sparsify against the template of the target shape.
    const Graph tpl = make_caterpillar(shape).graph;
    SparsifyResult sr = sparsify(g0, eps_degree, tpl, opt.budget, ell, opt.parallel);
    if (auto* w = std::get_if<SparsifyWitness>(&sr)) {
        auto kind = w->complemented ? CertificateKind::induced_pattern_complement
                                    : CertificateKind::induced_pattern;
        return finish(Certificate::pattern(kind, shape, std::move(w->embedding), n), "sparsify",
                      w->complemented);
    }
    if (auto* d = std::get_if<SparsifyDiagnostic>(&sr)) {
        report["stage_reached"] = "sparsify";
        report["verified"] = false;
        throw DiagnosticError(d->message + "\nreport: " + report.dump());
    }

    CleanSide clean = std::get<CleanSide>(std::move(sr));
    auto [sub_raw, ids] = induced_subgraph(g0, clean.subset);
    Graph sub = clean.complemented ? complement(sub_raw) : std::move(sub_raw);

    // (4) colouring.
    ColouredGraph cg = equipartition(std::make_shared<Graph>(std::move(sub)),
                                     static_cast<int>(ell), opt.seed);

    SearchObserver observer;
    if (opt.trace)
        observer = [&](int depth, const SearchState& st, const ColouredGraph& scg,
                       const Rational&, int) {
            nlohmann::ordered_json line;
            line["depth"] = depth;
            line["k"] = st.k;
            line["active"] = st.active;
            auto working = nlohmann::ordered_json::object();
            for (const auto& [i, w] : st.working) working[std::to_string(i)] = w.size();
            line["working_sizes"] = std::move(working);
            auto ferns = nlohmann::ordered_json::object();
            for (const auto& [i, fs] : st.families) {
                auto arr = nlohmann::ordered_json::array();
                for (const Fern& f : fs) arr.push_back(fern_to_json(f));
                ferns[std::to_string(i)] = std::move(arr);
            }
            line["ferns"] = std::move(ferns);
            (void)scg;
            opt.trace(line);
        };

    // (5) the junior-caterpillar search.
    auto jr = junior_search(cg, shape.h, shape.d, schedule.alpha(), observer);
    if (auto* p = std::get_if<AntiPair>(&jr))
        return finish(make_pair_certificate(*p, clean.complemented, ids, n), "junior_search",
                      clean.complemented);

    // (6) leg attachment.
    auto ar = attach_legs(cg.g(), std::get<JuniorCaterpillar>(jr), shape, eps);
    if (auto* p = std::get_if<AntiPair>(&ar))
        return finish(make_pair_certificate(*p, clean.complemented, ids, n), "attach_legs",
                      clean.complemented);

    Embedding local = std::get<Embedding>(std::move(ar));
    for (int& v : local.map) v = ids[static_cast<std::size_t>(v)];
    auto kind = clean.complemented ? CertificateKind::induced_pattern_complement
                                   : CertificateKind::induced_pattern;
    return finish(Certificate::pattern(kind, shape, std::move(local), n), "attach_legs",
                  clean.complemented);
}

}  // namespace eh
