#include "atmatch/certificate.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "atmatch/error.hpp"
#include "atmatch/graph_io.hpp"

namespace atmatch {

namespace {

constexpr std::string_view kHeader = "atmatch-certificate 1";

std::string format_matching(const PlaneGraph& g, const Matching& m) {
    if (m.edges.empty()) return "-";
    std::string out;
    for (const Edge& p : m.canonical().edges)
        out += (out.empty() ? "" : ",") + g.name(p.u) + (m.oriented ? ">" : "-") + g.name(p.v);
    return out;
}

Matching parse_matching(const PlaneGraph& g, std::string_view text, bool oriented) {
    Matching m{{}, oriented};
    if (text == "-") return m;
    const char sep = oriented ? '>' : '-';
    std::istringstream in{std::string(text)};
    for (std::string item; std::getline(in, item, ',');) {
        auto pos = item.find(sep);
        if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "malformed matching pair '" + item + "'");
        Edge p{parse_vertex(g, item.substr(0, pos)), parse_vertex(g, item.substr(pos + 1))};
        m.edges.push_back(oriented ? p : p.sorted());
    }
    return m.canonical();
}

Mode parse_mode(std::string_view s) {
    for (Mode m : {Mode::Plain, Mode::Oriented, Mode::Signed})
        if (mode_name(m) == s) return m;
    throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(s) + "'");
}

Rule parse_rule(std::string_view s) {
    for (Rule r : {Rule::Base, Rule::Chord, Rule::N3, Rule::Subcase2i, Rule::Subcase2ii, Rule::Augment,
                   Rule::Restrict, Rule::Component})
        if (rule_name(r) == s) return r;
    throw Error(ErrorCode::ParseError, "unknown trace rule '" + std::string(s) + "'");
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace

std::string serialize_certificate(const PlaneGraph& g, const Certificate& cert) {
    std::ostringstream out;
    out << kHeader << "\n";
    out << "graph " << cert.graph_digest << "\n";
    out << "mode " << mode_name(cert.mode) << "\n";
    out << "edge " << g.name(cert.e.u) << " " << g.name(cert.e.v) << "\n";
    out << "matching " << format_matching(g, cert.matching) << "\n";
    out << "eta " << format_eta(g, cert.eta) << "\n";
    out << "eta_final " << format_eta(g, cert.eta_final) << "\n";
    out << "coefficient " << cert.coefficient.str() << "\n";
    for (const TraceStep& s : cert.trace) {
        out << "step " << s.depth << " " << rule_name(s.rule);
        for (const auto& [k, v] : s.params) out << " " << k << "=" << v;
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

Certificate parse_certificate(const PlaneGraph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    const std::array<std::string_view, 7> keys = {"graph", "mode", "edge", "matching", "eta", "eta_final",
                                                  "coefficient"};
    if (lines.size() < keys.size() + 2 || lines[0] != kHeader)
        throw Error(ErrorCode::ParseError, "not a certificate (missing header)");

    std::array<std::string, 7> values;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::string& line = lines[i + 1];
        const std::string prefix = std::string(keys[i]) + " ";
        if (line.rfind(prefix, 0) != 0)
            throw Error(ErrorCode::ParseError, "expected `" + std::string(keys[i]) + "` on line " + std::to_string(i + 2));
        values[i] = line.substr(prefix.size());
    }

    Certificate cert;
    cert.graph_digest = values[0];
    cert.mode = parse_mode(values[1]);
    auto edge_tokens = tokens_of(values[2]);
    if (edge_tokens.size() != 2) throw Error(ErrorCode::ParseError, "edge needs two vertices");
    cert.e = {parse_vertex(g, edge_tokens[0]), parse_vertex(g, edge_tokens[1])};
    cert.matching = parse_matching(g, values[3], cert.mode == Mode::Oriented);
    cert.eta = parse_eta(g, values[4]);
    cert.eta_final = parse_eta(g, values[5]);
    try {
        cert.coefficient = Integer(values[6]);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "coefficient is not an integer");
    }

    std::size_t i = keys.size() + 1;
    for (; i < lines.size() && lines[i] != "end"; ++i) {
        auto tok = tokens_of(lines[i]);
        if (tok.size() < 3 || tok[0] != "step") throw Error(ErrorCode::ParseError, "malformed trace line " + lines[i]);
        TraceStep step;
        try {
            step.depth = std::stoi(tok[1]);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "trace depth is not an integer");
        }
        step.rule = parse_rule(tok[2]);
        for (std::size_t k = 3; k < tok.size(); ++k) {
            auto eq = tok[k].find('=');
            if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "trace parameter without '='");
            step.params.emplace_back(tok[k].substr(0, eq), tok[k].substr(eq + 1));
        }
        cert.trace.push_back(std::move(step));
    }
    if (i >= lines.size()) throw Error(ErrorCode::ParseError, "certificate has no `end` line");
    for (++i; i < lines.size(); ++i)
        if (!lines[i].empty()) throw Error(ErrorCode::ParseError, "text after `end`");
    return cert;
}

}  // namespace atmatch
