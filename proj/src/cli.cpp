#include "atmatch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include "atmatch/certificate.hpp"
#include "atmatch/error.hpp"
#include "atmatch/extractor.hpp"
#include "atmatch/generators.hpp"
#include "atmatch/graph_io.hpp"
#include "atmatch/oracles.hpp"
#include "atmatch/painting.hpp"
#include "atmatch/polynomial.hpp"

namespace atmatch {

namespace {

struct RunConfig {
    std::string graph_file;
    std::string catalog_name;
    std::string gen_spec;
    std::string edge;
    std::string eta;
    std::string tokens;
    std::string lists;
    std::string cert;
    std::string out;
    std::string engine = "both";
    bool signed_mode = false;
    bool oriented = false;
    bool verify = false;
    bool without_matching = false;
    std::optional<std::uint64_t> seed;
    int defect = 0;
    int max_k = 0;
    int base_threshold = 6;
    std::size_t max_vertices = 64;
    std::size_t max_edges = 200;
};

struct Loaded {
    PlaneGraph graph;
    Signature signature;
};

Error usage(const std::string& what) { return Error(ErrorCode::UsageError, what); }

Loaded load_graph(const RunConfig& cfg) {
    const int sources = !cfg.graph_file.empty() + !cfg.catalog_name.empty() + !cfg.gen_spec.empty();
    if (sources != 1) throw usage("give exactly one of --graph FILE, --catalog NAME, --gen apollonian:N:SEED");
    Loaded out;
    if (!cfg.graph_file.empty()) {
        GraphDocument doc = parse_graph(read_text_file(cfg.graph_file));
        out.graph = std::move(doc.graph);
        out.signature = std::move(doc.signature);
    } else if (!cfg.catalog_name.empty()) {
        out.graph = catalog(cfg.catalog_name).graph;
    } else {
        std::istringstream in(cfg.gen_spec);
        std::string kind, n, seed;
        std::getline(in, kind, ':');
        std::getline(in, n, ':');
        std::getline(in, seed);
        auto numeric = [](const std::string& s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if (kind != "apollonian" || !numeric(n) || !numeric(seed) || n.size() > 6 || seed.size() > 19)
            throw usage("--gen expects apollonian:N:SEED");
        out.graph = random_apollonian(std::stoi(n), std::stoull(seed));
    }
    if (!cfg.signed_mode)
        out.signature = {};
    else if (cfg.seed)
        out.signature = random_signature(out.graph, *cfg.seed);
    if (out.graph.vertex_count() > cfg.max_vertices)
        throw usage("graph has " + std::to_string(out.graph.vertex_count()) + " vertices; raise --max-vertices (now " +
                    std::to_string(cfg.max_vertices) + ") to run it anyway");
    if (out.graph.edge_count() > cfg.max_edges)
        throw usage("graph has " + std::to_string(out.graph.edge_count()) + " edges; raise --max-edges (now " +
                    std::to_string(cfg.max_edges) + ") to run it anyway");
    return out;
}

Edge chosen_edge(const RunConfig& cfg, const PlaneGraph& g) {
    if (!cfg.edge.empty()) return parse_edge(g, cfg.edge);
    auto e = default_boundary_edge(g);
    if (!e) throw usage("graph has no edge to certify");
    return *e;
}

ExtractOptions extract_options(const RunConfig& cfg) {
    ExtractOptions opts;
    opts.oriented = cfg.oriented;
    opts.base_threshold = cfg.base_threshold;
    return opts;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty())
        out << text;
    else
        write_text_file(cfg.out, text);
}

std::string names(const PlaneGraph& g, const std::vector<VertexId>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.name(vs[i]);
    return s + "}";
}

std::string format_coloring(const PlaneGraph& g, const Coloring& c) {
    std::string s;
    for (const auto& [v, x] : c) s += (s.empty() ? "" : ",") + g.name(v) + "=" + std::to_string(x);
    return s.empty() ? "-" : s;
}

// Graph minus the matching of a freshly extracted certificate.
PlaneGraph maybe_without_matching(const RunConfig& cfg, const Loaded& in) {
    if (!cfg.without_matching) return in.graph;
    Certificate cert = extract(in.graph, chosen_edge(cfg, in.graph), in.signature, extract_options(cfg));
    if (cert.mode == Mode::Oriented) return in.graph;
    return in.graph.without_edges(cert.matching.edges);
}

int cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Loaded in = load_graph(cfg);
    Edge e = chosen_edge(cfg, in.graph);
    Certificate cert = extract(in.graph, e, in.signature, extract_options(cfg));
    const std::string text = serialize_certificate(in.graph, cert);
    emit(cfg, out, text);
    if (!cfg.verify) return 0;
    VerificationReport report = verify_certificate(in.graph, in.signature, parse_certificate(in.graph, text));
    err << report.to_text();
    return report.all_pass() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.cert.empty()) throw usage("verify needs --cert FILE");
    Loaded in = load_graph(cfg);
    Certificate cert = parse_certificate(in.graph, read_text_file(cfg.cert));
    VerificationReport report = verify_certificate(in.graph, in.signature, cert);
    emit(cfg, out, report.to_text());
    return report.all_pass() ? 0 : 1;
}

int cmd_at(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Loaded in = load_graph(cfg);
    SearchLimits limits;
    limits.max_k = cfg.max_k;
    AtResult r = at_number(in.graph, in.signature, limits);
    std::ostringstream text;
    text << "at " << r.k << "\n"
         << "witness " << format_eta(in.graph, r.witness) << "\n"
         << "candidates " << r.candidates << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_coeff(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.eta.empty()) throw usage("coeff needs --eta SPEC");
    Loaded in = load_graph(cfg);
    PlaneGraph g = maybe_without_matching(cfg, in);
    CoefficientQuery q{g, {}, in.signature, parse_eta(g, cfg.eta)};
    if (cfg.engine == "dp") {
        emit(cfg, out, coeff_dp(q).str() + "\n");
        return 0;
    }
    if (cfg.engine == "select") {
        emit(cfg, out, coeff_select(q).str() + "\n");
        return 0;
    }
    if (cfg.engine != "both") throw usage("--engine must be dp, select or both");
    Integer a = coeff_dp(q), b = coeff_select(q);
    if (a != b) {
        err << "engines disagree: dp " << a.str() << ", select " << b.str() << "\n";
        return 1;
    }
    emit(cfg, out, a.str() + "\n");
    return 0;
}

ExponentVector parse_tokens(const PlaneGraph& g, const std::string& spec) {
    if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        if (spec.size() > 3) throw usage("token count too large");
        ExponentVector t;
        for (VertexId v : g.vertices()) t.set(v, std::stoi(spec));
        return t;
    }
    return parse_eta(g, spec);
}

int cmd_paint(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.tokens.empty()) throw usage("paint needs --tokens K or --tokens v1=K1,...");
    Loaded in = load_graph(cfg);
    PlaneGraph g = maybe_without_matching(cfg, in);
    PaintResult r = paint_solve(g, parse_tokens(g, cfg.tokens), cfg.defect);
    std::ostringstream text;
    text << "winner " << player_name(r.winner) << "\n";
    text << "states " << r.states << "\n";
    for (const PaintPly& p : r.principal_variation)
        text << "ply " << player_name(p.player) << (p.player == Player::Lister ? " marks " : " colours ")
             << names(g, p.vertices) << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_color(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.lists.empty()) throw usage("color needs --lists FILE");
    Loaded in = load_graph(cfg);
    PlaneGraph g = maybe_without_matching(cfg, in);
    ListAssignment lists = parse_lists(g, read_text_file(cfg.lists));
    auto c = list_color(g, in.signature, lists, cfg.defect);
    emit(cfg, out, "coloring " + (c ? format_coloring(g, *c) : std::string("none")) + "\n");
    return 0;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Loaded in = load_graph(cfg);
    emit(cfg, out, serialize_graph(in.graph, in.signature));
    return 0;
}

int cmd_dot(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Loaded in = load_graph(cfg);
    std::optional<Certificate> cert;
    if (!cfg.cert.empty()) cert = parse_certificate(in.graph, read_text_file(cfg.cert));
    emit(cfg, out, export_dot(in.graph, cert));
    return 0;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SearchBudgetExceeded:
        case ErrorCode::InternalProofViolation:
            return 1;
        default:
            return 2;
    }
}

void add_source_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--graph", cfg.graph_file, "graph text file");
    cmd->add_option("--catalog", cfg.catalog_name, "catalog graph name");
    cmd->add_option("--gen", cfg.gen_spec, "generator spec apollonian:N:SEED");
    cmd->add_flag("--signed", cfg.signed_mode, "use edge signs (from the file, or random with --seed)");
    cmd->add_option("--seed", cfg.seed, "seed for random signs");
    cmd->add_option("--out", cfg.out, "write output here instead of stdout");
    cmd->add_option("--max-vertices", cfg.max_vertices, "refuse larger graphs")->capture_default_str();
    cmd->add_option("--max-edges", cfg.max_edges, "refuse graphs with more edges")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Matching-plus-monomial certificates for plane graphs", "atmatch"};
    app.require_subcommand(1);

    auto* extract_cmd = app.add_subcommand("extract", "build a certificate for (G, e)");
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against its graph");
    auto* at_cmd = app.add_subcommand("at", "Alon-Tarsi number by exhaustive search");
    auto* coeff_cmd = app.add_subcommand("coeff", "one coefficient of the graph polynomial");
    auto* paint_cmd = app.add_subcommand("paint", "solve the painting game");
    auto* color_cmd = app.add_subcommand("color", "defective list colouring");
    auto* gen_cmd = app.add_subcommand("gen", "write a graph file");
    auto* dot_cmd = app.add_subcommand("dot", "write a DOT drawing");
    for (auto* cmd : {extract_cmd, verify_cmd, at_cmd, coeff_cmd, paint_cmd, color_cmd, gen_cmd, dot_cmd})
        add_source_options(cmd, cfg);
    for (auto* cmd : {extract_cmd, verify_cmd, coeff_cmd, paint_cmd, color_cmd}) {
        cmd->add_option("--edge", cfg.edge, "boundary edge u,v (default: smallest boundary edge)");
        cmd->add_flag("--oriented", cfg.oriented, "oriented matching mode");
        cmd->add_option("--base-threshold", cfg.base_threshold, "vertex count solved by exhaustive search")
            ->capture_default_str();
    }
    extract_cmd->add_flag("--verify", cfg.verify, "verify the certificate, report on stderr");
    verify_cmd->add_option("--cert", cfg.cert, "certificate file");
    dot_cmd->add_option("--cert", cfg.cert, "certificate to draw on the graph");
    at_cmd->add_option("--max-k", cfg.max_k, "give up above this k (0 = no limit)");
    coeff_cmd->add_option("--eta", cfg.eta, "exponents v=x,...");
    coeff_cmd->add_option("--engine", cfg.engine, "dp, select or both")->capture_default_str();
    paint_cmd->add_option("--tokens", cfg.tokens, "K, or v=K,... per vertex");
    for (auto* cmd : {paint_cmd, color_cmd}) {
        cmd->add_option("--defect", cfg.defect, "defect d")->capture_default_str();
        cmd->add_flag("--without-matching", cfg.without_matching, "delete the extracted matching first");
    }
    coeff_cmd->add_flag("--without-matching", cfg.without_matching, "delete the extracted matching first");
    color_cmd->add_option("--lists", cfg.lists, "lists file, one `vertex: c1 c2 ...` per line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*extract_cmd) return cmd_extract(cfg, out, err);
        if (*verify_cmd) return cmd_verify(cfg, out, err);
        if (*at_cmd) return cmd_at(cfg, out, err);
        if (*coeff_cmd) return cmd_coeff(cfg, out, err);
        if (*paint_cmd) return cmd_paint(cfg, out, err);
        if (*color_cmd) return cmd_color(cfg, out, err);
        if (*gen_cmd) return cmd_gen(cfg, out, err);
        if (*dot_cmd) return cmd_dot(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 2;
}

}  // namespace atmatch
