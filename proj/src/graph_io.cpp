#include "atmatch/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "atmatch/error.hpp"

namespace atmatch {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool valid_name(std::string_view name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    });
}

int parse_int(std::string_view s, const std::string& what) {
    std::string text(trim(s));
    if (!text.empty() && text.front() == '+') text.erase(0, 1);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) throw Error(ErrorCode::ParseError, "expected an integer for " + what);
    return value;
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, VertexId, std::less<>> ids;
    std::map<VertexId, std::vector<std::string>> rot_names;
    std::optional<std::pair<std::string, std::string>> outer;
    std::vector<std::tuple<std::string, std::string, int>> signs;

    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        auto tokens = split_ws(line);
        const std::string& kw = tokens[0];
        if (kw == "v") {
            if (tokens.size() != 2) throw Error(ErrorCode::ParseError, where + "expected `v <name>`");
            if (!valid_name(tokens[1]))
                throw Error(ErrorCode::ParseError, where + "invalid vertex name '" + tokens[1] + "'");
            if (!ids.emplace(tokens[1], static_cast<VertexId>(names.size())).second)
                throw Error(ErrorCode::ParseError, where + "vertex " + tokens[1] + " declared twice");
            names.push_back(tokens[1]);
        } else if (kw == "rot") {
            auto colon = line.find(':');
            if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, where + "expected `rot <name>: ...`");
            std::string owner(trim(line.substr(3, colon - 3)));
            auto it = ids.find(owner);
            if (it == ids.end()) throw Error(ErrorCode::UnknownVertex, where + "undeclared vertex '" + owner + "'");
            if (rot_names.count(it->second))
                throw Error(ErrorCode::ParseError, where + "second rotation for " + owner);
            rot_names[it->second] = split_ws(line.substr(colon + 1));
        } else if (kw == "outer") {
            if (tokens.size() != 3) throw Error(ErrorCode::ParseError, where + "expected `outer <u> <v>`");
            if (outer) throw Error(ErrorCode::ParseError, where + "second outer anchor");
            outer = std::pair(tokens[1], tokens[2]);
        } else if (kw == "sign") {
            if (tokens.size() != 4) throw Error(ErrorCode::ParseError, where + "expected `sign <u> <v> <+1|-1>`");
            int s = parse_int(tokens[3], "sign");
            if (s != 1 && s != -1) throw Error(ErrorCode::ParseError, where + "sign must be +1 or -1");
            signs.emplace_back(tokens[1], tokens[2], s);
        } else {
            throw Error(ErrorCode::ParseError, where + "unknown directive '" + kw + "'");
        }
    }

    auto lookup = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it == ids.end()) throw Error(ErrorCode::UnknownVertex, "undeclared vertex '" + name + "'");
        return it->second;
    };
    std::vector<std::vector<VertexId>> rotation(names.size());
    for (const auto& [v, list] : rot_names)
        for (const std::string& n : list) rotation[static_cast<std::size_t>(v)].push_back(lookup(n));
    std::optional<Dart> anchor;
    if (outer) anchor = Dart{lookup(outer->first), lookup(outer->second)};

    GraphDocument doc;
    doc.graph = PlaneGraph::build(std::move(names), std::move(rotation), anchor);
    for (const auto& [a, b, s] : signs) {
        VertexId u = lookup(a), v = lookup(b);
        if (!doc.graph.has_edge(u, v)) throw Error(ErrorCode::ParseError, "sign given for non-edge " + a + "," + b);
        doc.signature.set(u, v, s);
    }
    return doc;
}

std::string serialize_graph(const PlaneGraph& g, const Signature& sigma) {
    std::string out;
    for (VertexId v : g.vertices()) out += "v " + g.name(v) + "\n";
    for (VertexId v : g.vertices()) {
        out += "rot " + g.name(v) + ":";
        for (VertexId u : g.rotation(v)) out += " " + g.name(u);
        out += "\n";
    }
    if (auto a = g.outer_anchor()) out += "outer " + g.name(a->from) + " " + g.name(a->to) + "\n";
    for (const Edge& e : sigma.negative_edges())
        if (g.contains(e.u) && g.contains(e.v) && g.has_edge(e.u, e.v))
            out += "sign " + g.name(e.u) + " " + g.name(e.v) + " -1\n";
    return out;
}

std::string graph_digest(const PlaneGraph& g, const Signature& sigma) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : serialize_graph(g, sigma)) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

VertexId parse_vertex(const PlaneGraph& g, std::string_view name) {
    auto v = g.find(trim(name));
    if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(trim(name)) + "'");
    return *v;
}

Edge parse_edge(const PlaneGraph& g, std::string_view spec) {
    std::vector<std::string_view> parts;
    if (spec.find(',') != std::string_view::npos)
        parts = split_on(spec, ',');
    else
        parts = split_on(spec, '-');
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "edge must be given as u,v");
    Edge e{parse_vertex(g, parts[0]), parse_vertex(g, parts[1])};
    if (!g.has_edge(e.u, e.v))
        throw Error(ErrorCode::ParseError, std::string(trim(parts[0])) + "," + std::string(trim(parts[1])) +
                                               " is not an edge");
    return e;
}

ExponentVector parse_eta(const PlaneGraph& g, std::string_view spec) {
    ExponentVector eta;
    spec = trim(spec);
    if (spec.empty() || spec == "-") return eta;
    std::vector<char> seen(g.names()->size(), 0);
    for (std::string_view item : split_on(spec, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected vertex=exponent, got '" +
                                                                                 std::string(item) + "'");
        VertexId v = parse_vertex(g, item.substr(0, eq));
        if (seen[static_cast<std::size_t>(v)]++)
            throw Error(ErrorCode::ParseError, "vertex " + g.name(v) + " given twice");
        int x = parse_int(item.substr(eq + 1), "exponent of " + g.name(v));
        if (x < 0) throw Error(ErrorCode::NegativeExponent, "exponent of " + g.name(v) + " is negative");
        eta.set(v, x);
    }
    return eta;
}

std::string format_eta(const PlaneGraph& g, const ExponentVector& eta) {
    if (eta.empty()) return "-";
    std::string out;
    for (const auto& [v, x] : eta.entries()) out += (out.empty() ? "" : ",") + g.name(v) + "=" + std::to_string(x);
    return out;
}

ListAssignment parse_lists(const PlaneGraph& g, std::string_view text) {
    ListAssignment lists;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected `vertex: colors`");
        VertexId v = parse_vertex(g, line.substr(0, colon));
        if (lists.count(v)) throw Error(ErrorCode::ParseError, "second list for " + g.name(v));
        std::vector<int> colors;
        for (const std::string& t : split_ws(line.substr(colon + 1))) colors.push_back(parse_int(t, "color"));
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (colors.empty()) throw Error(ErrorCode::ParseError, "empty list for " + g.name(v));
        lists[v] = std::move(colors);
    }
    for (VertexId v : g.vertices())
        if (!lists.count(v)) throw Error(ErrorCode::ParseError, "no list for vertex " + g.name(v));
    return lists;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::UsageError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::UsageError, "cannot write " + path);
    out << text;
}

}  // namespace atmatch
