#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string command = std::string(LEAFAGE_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe);
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(CLI_DATA) + "/" + name; }

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "leafage_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

json analyze(const std::string& input, const std::string& extra = "") {
    auto r = run("analyze -i " + input + " " + extra);
    CHECK_MESSAGE(r.code == 0, r.out);
    return json::parse(r.out);
}

}

TEST_CASE("analyze reports classes and values") {
    auto p4 = analyze(data("p4.txt"));
    CHECK(p4["classes"]["interval"] == true);
    CHECK(p4["leafage"]["upper"] == 2);
    CHECK(p4["proper_leafage"]["upper"] == 2);

    auto fig1 = analyze(data("fig1.txt"));
    CHECK(fig1["leafage"]["upper"] == 4);
    CHECK(fig1["leafage"]["method"] == "oracle");
    CHECK(fig1["asteroidal"]["number"] == 3);
    CHECK(fig1["width_P"] == 6);
    CHECK(fig1["width_P_restricted"] == 2);
    CHECK(fig1["classes"]["two_clique_derived"] == true);

    auto dir = scratch();
    CHECK(run("generate kite -n 4 -o " + (dir / "kite4.txt").string()).code == 0);
    auto kite = analyze((dir / "kite4.txt").string());
    CHECK(kite["n"] == 13);
    CHECK(kite["m"] == 20);
    CHECK(kite["proper_leafage"]["upper"] == 6);
    CHECK(kite["proper_leafage"]["exact"] == true);
}

TEST_CASE("exit codes") {
    auto c5 = run("analyze -i " + data("c5.txt"));
    CHECK(c5.code == 1);
    CHECK(json::parse(c5.out)["witness_cycle"].size() == 5);
    CHECK(run("analyze -i " + data("malformed.txt")).code == 2);
    CHECK(run("analyze -i " + data("out_of_range.txt")).code == 2);
    CHECK(run("analyze -i " + data("missing.txt")).code == 2);
    CHECK(run("analyze -i " + data("disconnected.txt")).code == 1);
    CHECK(run("generate kite -n 0").code == 2);
    CHECK(run("generate nosuch -n 4").code == 2);
    CHECK(run("frobnicate").code == 2);
    auto dup = scratch() / "dup.txt";
    std::ofstream(dup) << "0 1\n# comment\n1 0\n";
    auto r = run("analyze -i " + dup.string());
    CHECK(r.code == 2);
    CHECK(r.out.find("duplicate") != std::string::npos);
}

TEST_CASE("an exceeded cap is a distinct exit code") {
    // A 30-vertex tree has more simplicial vertices than the asteroidal search may take.
    auto dir = scratch();
    CHECK(run("generate tree -n 30 --seed 3 -o " + (dir / "tree30.txt").string()).code == 0);
    auto r = run("--max-simplicial 2 analyze -i " + (dir / "tree30.txt").string());
    CHECK(r.code == 3);
}

TEST_CASE("generate is deterministic and well-formed") {
    auto a = run("generate random-chordal -n 10 --seed 7");
    auto b = run("generate random-chordal -n 10 --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto dir = scratch();
    std::ofstream(dir / "rc.txt") << a.out;
    CHECK(analyze((dir / "rc.txt").string())["chordal"] == true);
    auto extremal = run("generate extremal -n 8");
    CHECK(extremal.out.rfind("p 8 14\n", 0) == 0);
}

TEST_CASE("generate, analyze, verify round trip") {
    auto dir = scratch();
    std::vector<std::string> families{"tree", "ktree", "block", "kite", "extremal", "random-chordal", "claw-free",
                                      "two-clique"};
    for (auto& family : families) {
        for (int seed = 1; seed <= 3; ++seed) {
            int n = family == "kite" ? seed + 1 : 6 + 2 * seed;
            auto graph = (dir / (family + std::to_string(seed) + ".txt")).string();
            auto cert = graph + ".cert.json", proper = graph + ".proper.json";
            REQUIRE(run("generate " + family + " -n " + std::to_string(n) + " --seed " + std::to_string(seed) +
                        " -o " + graph)
                        .code == 0);
            auto first = run("analyze -i " + graph + " --certificate " + cert + " --proper-certificate " + proper);
            auto second = run("--jobs 2 analyze -i " + graph);
            CHECK_MESSAGE(first.code == 0, family, " ", first.out);
            CHECK(first.out == second.out);
            CHECK(run("verify -i " + graph + " -c " + cert).code == 0);
            CHECK(run("verify -i " + graph + " -c " + proper + " --proper").code == 0);
            auto doc = json::parse(slurp(cert));
            CHECK(doc["meta"]["leaves"] == json::parse(first.out)["leafage"]["upper"]);
        }
    }
}

TEST_CASE("verify reports violations") {
    auto dir = scratch();
    auto cert = (dir / "fig1.cert.json").string();
    analyze(data("fig1.txt"), "--certificate " + cert);
    CHECK(run("verify -i " + data("fig1.txt") + " -c " + cert + " --minimal").code == 0);
    auto doc = json::parse(slurp(cert));
    // Drop an inner node from some subtree with at least three nodes.
    std::map<int, std::vector<int>> adj;
    for (auto& e : doc["host_edges"]) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    bool broken = false;
    for (auto& [vertex, nodes] : doc["assign"].items()) {
        std::vector<int> set = nodes;
        for (int t : set) {
            int inside = 0;
            for (int s : adj[t]) inside += std::count(set.begin(), set.end(), s);
            if (inside >= 2 && !broken) {
                set.erase(std::find(set.begin(), set.end(), t));
                nodes = set;
                broken = true;
                break;
            }
        }
    }
    REQUIRE(broken);
    auto bad = dir / "fig1.bad.json";
    std::ofstream(bad) << doc.dump();
    auto r = run("verify -i " + data("fig1.txt") + " -c " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("disconnected subtree") != std::string::npos);
    std::ofstream(dir / "junk.json") << "{not json";
    CHECK(run("verify -i " + data("fig1.txt") + " -c " + (dir / "junk.json").string()).code == 2);

    auto kite = (dir / "kite3.txt").string(), kcert = kite + ".proper.json";
    run("generate kite -n 3 -o " + kite);
    analyze(kite, "--proper-certificate " + kcert);
    CHECK(run("verify -i " + kite + " -c " + kcert + " --proper").code == 0);
    // The leafage certificate of a kite is an interval layout, which is not proper.
    auto lcert = kite + ".cert.json";
    analyze(kite, "--certificate " + lcert);
    CHECK(run("verify -i " + kite + " -c " + lcert + " --proper").code == 1);
}

TEST_CASE("export-dot") {
    auto dir = scratch();
    auto k4 = (dir / "k4.cert.json").string();
    analyze(data("k4.txt"), "--certificate " + k4);
    auto one = run("export-dot -i " + data("k4.txt") + " -c " + k4);
    CHECK(one.code == 0);
    CHECK(one.out == "graph host {\n  q0 [label=\"0 1 2 3\"];\n}\n");

    auto p3 = (dir / "p3.cert.json").string();
    analyze(data("p3.txt"), "--certificate " + p3);
    auto two = run("export-dot -i " + data("p3.txt") + " -c " + p3);
    CHECK(two.out == "graph host {\n  q0 [label=\"0 1\"];\n  q1 [label=\"1 2\"];\n  q0 -- q1;\n}\n");

    auto fig1 = (dir / "fig1.cert.json").string();
    analyze(data("fig1.txt"), "--certificate " + fig1);
    auto dot = run("export-dot -i " + data("fig1.txt") + " -c " + fig1);
    CHECK(dot.code == 0);
    size_t nodes = 0, edges = 0;
    std::istringstream lines(dot.out);
    std::map<std::string, int> degree;
    for (std::string line; std::getline(lines, line);) {
        if (line.find("[label=") != std::string::npos) ++nodes;
        if (auto at = line.find(" -- "); at != std::string::npos) {
            ++edges;
            degree[line.substr(2, at - 2)]++;
            degree[line.substr(at + 4, line.size() - at - 5)]++;
        }
    }
    CHECK(nodes == 8);
    CHECK(edges == 7);
    CHECK(std::count_if(degree.begin(), degree.end(), [](auto& d) { return d.second == 1; }) == 4);
    CHECK(run("export-dot -i " + data("p4.txt") + " -c " + fig1).code == 1);
    CHECK(run("export-dot -c " + fig1).out == dot.out);
}
