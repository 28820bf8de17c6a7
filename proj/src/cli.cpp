#include "eh/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eh/certificate.hpp"
#include "eh/errors.hpp"
#include "eh/generators.hpp"
#include "eh/graph_io.hpp"
#include "eh/pipeline.hpp"

namespace eh {

namespace {

CaterpillarShape parse_shape(const std::string& text) {
    CaterpillarShape s;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> s.h >> c1 >> s.d >> c2 >> s.t) || c1 != ',' || c2 != ',')
        throw ParameterError("bad --shape '" + text + "', expected h,d,t");
    if (!s.valid()) throw ParameterError("invalid shape parameters '" + text + "'");
    return s;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open output file '" + path + "'");
    out << text;
}

bool parallel_from_env() {
    const char* env = std::getenv("EH_CERTIFY_THREADS");
    if (!env) return false;
    return std::atoi(env) >= 2;
}

struct CommonOpts {
    std::string input;
    std::string pattern_path;
    std::string shape_text;
    std::uint64_t seed = 0;
    long long ell = 0;
    std::string eps_text;
    std::uint64_t budget = 200000;
    std::string out_path;
    bool verbose = false;
};

Graph load_pattern(const CommonOpts& o) {
    if (!o.pattern_path.empty() && !o.shape_text.empty())
        throw ParameterError("--pattern and --shape are mutually exclusive");
    if (!o.pattern_path.empty()) return read_graph_file(o.pattern_path);
    if (!o.shape_text.empty()) return make_caterpillar(parse_shape(o.shape_text)).graph;
    throw ParameterError("need --pattern FILE or --shape h,d,t");
}

int cmd_dichotomy(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.input.empty()) throw ParameterError("dichotomy: --input is required");
    Graph g0 = read_graph_file(o.input);
    Graph pattern = load_pattern(o);

    DichotomyOptions opt;
    opt.seed = o.seed;
    opt.budget = o.budget;
    opt.parallel = parallel_from_env();
    if (o.ell > 0) opt.ell_override = o.ell;
    if (!o.eps_text.empty()) opt.eps_override = parse_fraction(o.eps_text);
    if (o.verbose)
        opt.trace = [&err](const nlohmann::ordered_json& line) { err << line.dump() << "\n"; };

    DichotomyOutcome outcome = dichotomy(g0, pattern, opt);
    nlohmann::ordered_json envelope;
    envelope["certificate"] = certificate_to_json(outcome.certificate);
    envelope["report"] = std::move(outcome.report);
    write_text(o.out_path, envelope.dump(2) + "\n", out);
    return 0;
}

int cmd_gen(const CommonOpts& o, const std::string& gen_name, int n, const std::string& p_text,
            int delta, const std::string& frac_text, const std::string& sidecar_path,
            std::ostream& out, std::ostream& err) {
    Graph g{0};
    std::optional<Certificate> sidecar;
    if (gen_name == "gnp") {
        g = gen_gnp(n, parse_fraction(p_text.empty() ? "1/2" : p_text), o.seed);
    } else if (gen_name == "bounded_degree") {
        g = gen_bounded_degree(n, delta, o.seed);
    } else if (gen_name == "planted_caterpillar") {
        if (o.shape_text.empty()) throw ParameterError("planted_caterpillar needs --shape");
        auto inst = gen_planted_caterpillar(parse_shape(o.shape_text), n, o.seed);
        g = std::move(inst.graph);
        sidecar = std::move(inst.sidecar);
    } else if (gen_name == "planted_bipartite_hole") {
        auto inst =
            gen_planted_bipartite_hole(n, parse_fraction(frac_text.empty() ? "1/4" : frac_text),
                                       o.seed);
        g = std::move(inst.graph);
        sidecar = std::move(inst.sidecar);
    } else if (gen_name == "two_cliques") {
        auto inst = gen_two_cliques(n, o.seed);
        g = std::move(inst.graph);
        sidecar = std::move(inst.sidecar);
    } else {
        throw ParameterError("unknown generator '" + gen_name + "'");
    }

    std::ostringstream body;
    write_edge_list(body, g);
    write_text(o.out_path, body.str(), out);

    if (sidecar) {
        std::string path = sidecar_path;
        if (path.empty() && !o.out_path.empty()) path = o.out_path + ".cert.json";
        if (!path.empty())
            write_text(path, certificate_to_json(*sidecar).dump(2) + "\n", out);
        else if (o.verbose)
            err << "note: planted certificate discarded (no --out/--sidecar)\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& cert_path, std::ostream& out,
               std::ostream& err) {
    if (o.input.empty()) throw ParameterError("verify: --input is required");
    if (cert_path.empty()) throw ParameterError("verify: --cert is required");
    Graph g0 = read_graph_file(o.input);

    std::ifstream in(cert_path);
    if (!in) throw ParameterError("cannot open certificate file '" + cert_path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw MalformedCertificateError(std::string("certificate is not valid JSON: ") +
                                        ex.what());
    }
    if (j.contains("certificate")) j = j["certificate"];  // accept the dichotomy envelope
    Certificate cert = certificate_from_json(j);

    CheckResult r = verify_certificate(g0, cert);
    if (r.ok) {
        out << "OK\n";
        return 0;
    }
    err << "verification failed: " << r.reason << "\n";
    return 2;
}

int cmd_constants(const CommonOpts& o, std::ostream& out) {
    if (o.shape_text.empty()) throw ParameterError("constants: --shape h,d,t is required");
    auto schedule = constants(parse_shape(o.shape_text));
    write_text(o.out_path, schedule_to_json(schedule).dump(2) + "\n", out);
    return 0;
}

int cmd_export_dot(const CommonOpts& o, const std::string& structure_path, std::ostream& out) {
    if (!o.input.empty()) {
        Graph g = read_graph_file(o.input);
        write_text(o.out_path, graph_to_dot(g), out);
        return 0;
    }
    if (structure_path.empty())
        throw ParameterError("export-dot: need --input GRAPH or --structure JSON");
    std::ifstream in(structure_path);
    if (!in) throw ParameterError("cannot open structure file '" + structure_path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError(std::string("structure file is not valid JSON: ") + ex.what());
    }
    std::size_t universe = 0;
    auto bump = [&](const nlohmann::json& vs) {
        for (const auto& v : vs) {
            int id = v.get<int>();
            if (id < 0) throw ParameterError("structure JSON contains a negative vertex id");
            universe = std::max(universe, static_cast<std::size_t>(id) + 1);
        }
    };
    std::string dot;
    if (j.contains("nodes")) {
        for (const auto& nd : j["nodes"]) bump(nd.at("bud").at("vertices"));
        dot = fern_to_dot(fern_from_json(j, universe));
    } else if (j.contains("path")) {
        bump(j["path"]);
        for (const auto& row : j.at("buds"))
            for (const auto& b : row) bump(b.at("vertices"));
        dot = junior_to_dot(junior_from_json(j, universe));
    } else {
        throw ParameterError("structure JSON is neither a fern nor a junior caterpillar");
    }
    write_text(o.out_path, dot, out);
    return 0;
}

}  // namespace

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string fern_to_dot(const Fern& f) {
    std::ostringstream out;
    out << "graph fern {\n";
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        out << "  subgraph cluster_bud" << i << " {\n";
        out << "    label=\"bud " << i << " (colour " << f.nodes[i].bud.witness_colour
            << ")\";\n";
        for (int v : f.nodes[i].bud.vertices.to_vector()) out << "    " << v << ";\n";
        out << "  }\n";
    }
    for (std::size_t i = 1; i < f.nodes.size(); ++i) {
        int a = f.nodes[static_cast<std::size_t>(f.nodes[i].parent)].bud.vertices.first();
        int b = f.nodes[i].bud.vertices.first();
        out << "  " << a << " -- " << b << " [style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

std::string junior_to_dot(const JuniorCaterpillar& jc) {
    std::ostringstream out;
    out << "graph junior {\n";
    for (std::size_t i = 0; i + 1 < jc.path.size(); ++i)
        out << "  " << jc.path[i] << " -- " << jc.path[i + 1] << ";\n";
    if (jc.path.size() == 1) out << "  " << jc.path[0] << ";\n";
    for (std::size_t i = 0; i < jc.buds.size(); ++i)
        for (std::size_t j = 0; j < jc.buds[i].size(); ++j) {
            out << "  subgraph cluster_bud_" << i << "_" << j << " {\n";
            out << "    label=\"bud (" << i + 1 << "," << j + 1 << ") colour "
                << jc.buds[i][j].witness_colour << "\";\n";
            for (int v : jc.buds[i][j].vertices.to_vector()) out << "    " << v << ";\n";
            out << "  }\n";
            out << "  " << jc.path[i] << " -- " << jc.buds[i][j].vertices.first()
                << " [style=dashed];\n";
        }
    out << "}\n";
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certificate engine for the caterpillar dichotomy"};
    app.name("eh-certify");

    CommonOpts o;
    std::string gen_name, p_text, frac_text, sidecar_path, cert_path, structure_path;
    int n = 0, delta = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", o.input, "input graph file (edge list or .g6)");
        cmd->add_option("--pattern", o.pattern_path, "caterpillar pattern graph file");
        cmd->add_option("--shape", o.shape_text, "caterpillar shape h,d,t");
        cmd->add_option("--seed", o.seed, "PRNG seed");
        cmd->add_option("--ell", o.ell, "override the colour count (experimental)");
        cmd->add_option("--eps", o.eps_text, "override eps as p/q (experimental)");
        cmd->add_option("--budget", o.budget, "node budget for the sparsifier pattern probes");
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
        cmd->add_flag("-v,--verbose", o.verbose, "verbose trace to stderr");
    };

    CLI::App* c_dich = app.add_subcommand("dichotomy", "run the full certificate pipeline");
    CLI::App* c_gen = app.add_subcommand("gen", "generate benchmark instances");
    CLI::App* c_verify = app.add_subcommand("verify", "verify a certificate against a graph");
    CLI::App* c_const = app.add_subcommand("constants", "print the exact constant schedule");
    CLI::App* c_dot = app.add_subcommand("export-dot", "render a graph or structure as DOT");
    for (CLI::App* c : {c_dich, c_gen, c_verify, c_const, c_dot}) add_common(c);

    c_gen->add_option("--gen", gen_name,
                      "generator: gnp|bounded_degree|planted_caterpillar|"
                      "planted_bipartite_hole|two_cliques")
        ->required();
    c_gen->add_option("--n", n, "vertex count")->required();
    c_gen->add_option("--p", p_text, "edge probability p/q (gnp)");
    c_gen->add_option("--delta", delta, "max degree (bounded_degree)");
    c_gen->add_option("--frac", frac_text, "side fraction p/q (planted_bipartite_hole)");
    c_gen->add_option("--sidecar", sidecar_path, "planted certificate output path");
    c_verify->add_option("--cert", cert_path, "certificate JSON file");
    c_dot->add_option("--structure", structure_path, "fern / junior caterpillar JSON file");

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);  // CLI11's vector overload expects reversed args
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (c_dich->parsed()) return cmd_dichotomy(o, out, err);
        if (c_gen->parsed())
            return cmd_gen(o, gen_name, n, p_text, delta, frac_text, sidecar_path, out, err);
        if (c_verify->parsed()) return cmd_verify(o, cert_path, out, err);
        if (c_const->parsed()) return cmd_constants(o, out);
        if (c_dot->parsed()) return cmd_export_dot(o, structure_path, out);
        err << "usage error: no subcommand\n";
        return 1;
    } catch (const DiagnosticError& e) {
        err << "diagnostic failure: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        err << "diagnostic failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace eh
