#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "atmatch/cli.hpp"
#include "atmatch/graph_io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = atmatch::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "atmatch-cli-tests";
    fs::create_directories(dir);
    return dir / name;
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_CASE("extract --verify on K4") {
    Run r = run({"extract", "--catalog", "k4", "--verify"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "eta_final v1=1,v3=2,v4=3"));
    CHECK(has_line(r.out, "matching -"));
    CHECK(has_line(r.err, "verdict pass"));
}

TEST_CASE("coeff and at") {
    Run c = run({"coeff", "--catalog", "c4", "--eta", "v1=1,v2=1,v3=1,v4=1"});
    CHECK(c.code == 0);
    CHECK(c.out == "-2\n");
    CHECK(run({"coeff", "--catalog", "c4", "--eta", "v1=1,v2=1,v3=1,v4=1", "--engine", "dp"}).out == "-2\n");
    CHECK(run({"coeff", "--catalog", "c4", "--eta", "v1=1,v2=1,v3=1,v4=1", "--engine", "select"}).out == "-2\n");
    CHECK(run({"coeff", "--catalog", "c4", "--eta", "v3=2"}).out == "0\n");
    CHECK(run({"coeff", "--catalog", "c4", "--eta", "v1=1", "--engine", "fast"}).code == 2);

    Run a = run({"at", "--catalog", "c5"});
    CHECK(a.code == 0);
    CHECK(has_line(a.out, "at 3"));
    CHECK(run({"at", "--catalog", "k4", "--max-k", "3"}).code == 1);
}

TEST_CASE("extract then verify through files") {
    const auto cert = scratch("w6.cert").string();
    Run e = run({"extract", "--catalog", "w6", "--out", cert, "--base-threshold", "3"});
    CHECK(e.code == 0);
    CHECK(e.out.empty());
    Run v = run({"verify", "--catalog", "w6", "--cert", cert});
    CHECK(v.code == 0);
    CHECK(has_line(v.out, "verdict pass"));

    // Flip the coefficient sign.
    std::string text = atmatch::read_text_file(cert);
    auto pos = text.find("coefficient ");
    REQUIRE(pos != std::string::npos);
    auto end = text.find('\n', pos);
    std::string value = text.substr(pos + 12, end - pos - 12);
    std::string flipped = value[0] == '-' ? value.substr(1) : "-" + value;
    text.replace(pos + 12, value.size(), flipped);
    const auto bad = scratch("w6-bad.cert").string();
    atmatch::write_text_file(bad, text);
    Run f = run({"verify", "--catalog", "w6", "--cert", bad});
    CHECK(f.code == 1);
    CHECK(f.out.find("coefficient-mismatch") != std::string::npos);

    // Certificate checked against the wrong graph.
    CHECK(run({"verify", "--catalog", "w5", "--cert", cert}).code != 0);
}

TEST_CASE("graph files, gen and dot") {
    const auto file = scratch("apo.graph").string();
    Run g = run({"gen", "--gen", "apollonian:8:3", "--out", file});
    CHECK(g.code == 0);
    auto doc = atmatch::parse_graph(atmatch::read_text_file(file));
    CHECK(doc.graph.vertex_count() == 8);
    CHECK(doc.graph.edge_count() == 18);

    Run e = run({"extract", "--graph", file, "--verify", "--edge", "v2,v3"});
    CHECK(e.code == 0);
    CHECK(has_line(e.out, "edge v2 v3"));

    const auto cert = scratch("apo.cert").string();
    CHECK(run({"extract", "--graph", file, "--out", cert}).code == 0);
    Run d = run({"dot", "--graph", file, "--cert", cert});
    CHECK(d.code == 0);
    auto parsed = oracle::DotParser(d.out).parse();
    REQUIRE(parsed);
    CHECK(parsed->nodes.size() == 8);

    Run plain = run({"dot", "--catalog", "c3"});
    REQUIRE(oracle::DotParser(plain.out).parse());
}

TEST_CASE("signed runs") {
    const auto file = scratch("oct.graph").string();
    CHECK(run({"gen", "--catalog", "octahedron", "--out", file}).code == 0);
    // No sign lines in the file: signed mode sees sigma = +1 everywhere.
    CHECK(run({"extract", "--graph", file, "--signed"}).out == run({"extract", "--graph", file}).out);

    Run s = run({"extract", "--catalog", "octahedron", "--signed", "--seed", "5", "--verify"});
    CHECK(s.code == 0);
    CHECK(has_line(s.out, "mode signed"));
    CHECK(has_line(s.err, "verdict pass"));
    // Signs are ignored without --signed.
    CHECK(has_line(run({"extract", "--catalog", "octahedron", "--seed", "5"}).out, "mode plain"));
}

TEST_CASE("oriented extract") {
    Run o = run({"extract", "--catalog", "icosahedron", "--oriented", "--verify", "--base-threshold", "2"});
    CHECK(o.code == 0);
    CHECK(has_line(o.out, "mode oriented"));
    CHECK(o.out.find('>') != std::string::npos);
}

TEST_CASE("paint and color") {
    Run p = run({"paint", "--catalog", "c3", "--tokens", "2"});
    CHECK(p.code == 0);
    CHECK(has_line(p.out, "winner Lister"));
    CHECK(has_line(run({"paint", "--catalog", "c3", "--tokens", "1", "--defect", "1"}).out, "winner Lister"));
    CHECK(has_line(run({"paint", "--catalog", "k2", "--tokens", "2"}).out, "winner Painter"));
    CHECK(has_line(run({"paint", "--catalog", "octahedron", "--tokens", "4", "--without-matching"}).out,
                   "winner Painter"));
    CHECK(has_line(run({"paint", "--catalog", "c3", "--tokens", "v1=3,v2=3,v3=3"}).out, "winner Painter"));

    const auto lists = scratch("c3.lists").string();
    atmatch::write_text_file(lists, "v1: 1 2\nv2: 1 2\nv3: 1 2\n");
    Run none = run({"color", "--catalog", "c3", "--lists", lists});
    CHECK(none.code == 0);
    CHECK(has_line(none.out, "coloring none"));
    Run some = run({"color", "--catalog", "c3", "--lists", lists, "--defect", "1"});
    CHECK(some.out.rfind("coloring v1=", 0) == 0);
}

TEST_CASE("usage errors and guards") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"extract"}).code == 2);
    CHECK(run({"extract", "--catalog", "k4", "--graph", "x"}).code == 2);
    Run n = run({"extract", "--catalog", "nope"});
    CHECK(n.code == 2);
    CHECK(n.err.find("UnknownName") != std::string::npos);
    CHECK(run({"extract", "--catalog", "k4", "--edge", "v1,v4"}).code == 2);
    CHECK(run({"extract", "--catalog", "icosahedron", "--max-vertices", "10"}).code == 2);
    CHECK(run({"extract", "--graph", scratch("missing.graph").string()}).code == 2);
    CHECK(run({"extract", "--gen", "apollonian:x:1"}).code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
    for (const std::string src : {"k4", "w6", "octahedron", "icosahedron"}) {
        Run a = run({"extract", "--catalog", src, "--verify", "--base-threshold", "3"});
        Run b = run({"extract", "--catalog", src, "--verify", "--base-threshold", "3"});
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
    CHECK(run({"gen", "--gen", "apollonian:10:7"}).out == run({"gen", "--gen", "apollonian:10:7"}).out);
}
