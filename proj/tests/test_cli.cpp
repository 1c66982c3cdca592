#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cograph/cli.hpp"
#include "cograph/io.hpp"

namespace fs = std::filesystem;
using namespace cograph;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("cograph-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

const char* kP4 = "e a b\ne b c\ne c d\n";
// C4 1-2-3-4 with a pendant 5 on 1
const char* kBanner = "e 1 2\ne 2 3\ne 3 4\ne 4 1\ne 1 5\n";

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("solve") {
    const std::string p4 = write("p4.g", kP4);
    Run r = cli({"solve", p4, "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status solved") != std::string::npos);
    CHECK(r.out.find("cost 1") != std::string::npos);

    r = cli({"solve", p4, "--k", "0", "--json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "infeasible");
    CHECK(j["cost"].is_null());

    r = cli({"solve", write("banner.g", kBanner), "--k", "inf", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["cost"] == 1);

    CHECK(cli({"solve", p4, "--k", "-3"}).code == 2);
    CHECK(cli({"solve", p4, "--c", "2"}).code == 2);
    CHECK(cli({"solve", (scratch() / "missing.g").string()}).code == 2);
}

TEST_CASE("golden solve output") {
    const Run r = cli({"solve", write("banner.g", kBanner), "--json", "--C", "4"});
    REQUIRE(r.code == 0);
    const auto got = nlohmann::json::parse(r.out);
    const auto want = nlohmann::json::parse(slurp(fs::path(GOLDEN_DIR) / "banner_solve.json"));
    CHECK(got == want);
}

TEST_CASE("factor") {
    Run r = cli({"factor", "--vector", "1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "3.000000\n");
    CHECK(cli({"factor", "--vector", "1,2,2,2"}).out == "2.302776\n");
    CHECK(cli({"factor", "--vector", "1,2^3"}).out == "2.302776\n");
    r = cli({"factor", "--family", "two-plus-exp", "--epsilon", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("c 3\n", 0) == 0);
    CHECK(cli({"factor", "--vector", "1,0"}).code == 2);
    CHECK(cli({"factor"}).code == 2);
}

TEST_CASE("check and decompose") {
    Run r = cli({"check", write("p4.g", kP4)});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("p4 ", 0) == 0);
    r = cli({"check", write("c4.g", "e 1 2\ne 2 3\ne 3 4\ne 4 1\n")});
    CHECK(r.out == "cograph\n");
    r = cli({"decompose", write("c4.g", "e 1 2\ne 2 3\ne 3 4\ne 4 1\n"), "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "series");
    CHECK(j["blocks"].size() == 2);
}

TEST_CASE("witness") {
    // a path of 12c vertices is a chain
    std::string text;
    for (int i = 1; i < 36; ++i) text += "e " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    Run r = cli({"witness", write("p36.g", text), "--c", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Chain") != std::string::npos);
    CHECK(cli({"witness", write("p4.g", kP4), "--c", "3"}).code == 1);
}

TEST_CASE("verify") {
    const std::string g = write("banner.g", kBanner);
    for (bool json : {false, true}) {
        std::vector<std::string> args{"solve", g};
        if (json) args.push_back("--json");
        const Run s = cli(args);
        const std::string sol = write(json ? "sol.json" : "sol.txt", s.out);
        const Run v = cli({"verify", g, sol});
        CHECK(v.code == 0);
        CHECK(v.out == "ok cost 1\n");
    }
    CHECK(cli({"verify", g, write("bad1.txt", "status solved\ncost 0\n")}).code == 1);          // still a P4
    CHECK(cli({"verify", g, write("bad2.txt", "status solved\nd 2 4\n")}).code == 1);           // not an edge
    CHECK(cli({"verify", g, write("bad3.txt", "status solved\ncost 2\nd 1 5\n")}).code == 1);   // wrong cost
    CHECK(cli({"verify", g, write("bad4.txt", "status solved\nd 1 5\nd 5 1\n")}).code == 1);    // repeated
    CHECK(cli({"verify", g, write("bad5.txt", "status solved\nd 1 9\n")}).code == 1);           // unknown label
}

TEST_CASE("input errors") {
    Run r = cli({"check", write("bad.g", "e a a\n")});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    r = cli({"check", write("bad2.g", "v a 1\nv a 2\n")});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(cli({"check", write("bad3.g", "v a 0\n")}).code == 2);
    CHECK(cli({"check", write("bad4.g", "e a b\ne b a\n")}).code == 2);
    CHECK(cli({"check", write("bad5.g", "x 1 2\n")}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
}

TEST_CASE("graph round trip") {
    const LabeledGraph g = parse_graph_text("# comment\nv a 3\ne a b\ne b c\nv lonely\n");
    CHECK(g.graph.size() == 4);
    CHECK(g.graph.weight(*g.id("a")) == 3);
    const LabeledGraph h = parse_graph_text(serialize_graph(g));
    CHECK(h.labels == g.labels);
    CHECK(h.graph.edges() == g.graph.edges());
    for (Vertex v = 0; v < g.graph.size(); ++v) CHECK(h.graph.weight(v) == g.graph.weight(v));
}

TEST_CASE("bench") {
    const std::vector<std::string> args{"bench", "--gen", "gnp", "--n", "8", "--seeds", "3", "--no-time", "--C", "4"};
    const Run a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("instance,n,m,status,cost,nodes,leaves,fallbacks,worst_rule,rules\n", 0) == 0);

    const Run f = cli({"bench", "--gen", "family", "--family", "ThinSpider", "--n", "9", "--p", "0.1", "--seeds", "2",
                       "--no-time", "--C", "4"});
    CHECK(f.code == 0);
    CHECK(f.out.find("fixed:") != std::string::npos);

    const Run p = cli({"bench", "--gen", "path", "--n", "12", "--seeds", "1", "--no-time"});
    CHECK(p.code == 0);
    CHECK(p.out.find(",solved,3,") != std::string::npos);

    fs::create_directories(scratch() / "dir");
    write("dir/one.g", kP4);
    write("dir/two.g", kBanner);
    const Run d = cli({"bench", (scratch() / "dir").string(), "--no-time"});
    CHECK(d.code == 0);
    CHECK(d.out.find("one") != std::string::npos);
    CHECK(d.out.find("two") != std::string::npos);
}
