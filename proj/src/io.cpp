#include "leafage/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "leafage/error.hpp"

namespace leafage {

namespace {

[[noreturn]] void bad_line(int number, const std::string& why) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(number) + ": " + why);
}

}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int number = 0;
    int declared_n = -1;
    long long declared_m = -1;
    bool seen_edge = false;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int largest = -1;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') {
            continue;
        }
        if (first == "p") {
            if (declared_n >= 0 || seen_edge) {
                bad_line(number, "header must come first and only once");
            }
            std::string rest;
            if (!(fields >> declared_n >> declared_m) || declared_n < 0 || declared_m < 0 || (fields >> rest)) {
                bad_line(number, "expected \"p <n> <m>\"");
            }
            continue;
        }
        long long u = 0, v = 0;
        std::string extra;
        std::istringstream pair(line);
        if (!(pair >> u >> v) || (pair >> extra)) {
            bad_line(number, "expected \"<u> <v>\"");
        }
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) {
            bad_line(number, "vertex id out of range");
        }
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
            bad_line(number, "vertex id not below n = " + std::to_string(declared_n));
        }
        if (u == v) {
            bad_line(number, "loop at " + std::to_string(u));
        }
        std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(key).second) {
            bad_line(number, "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
        }
        edges.push_back(key);
        largest = std::max(largest, key.second);
        seen_edge = true;
    }
    if (in.bad()) {
        throw Error(ErrorKind::Parse, "read error");
    }
    if (declared_m >= 0 && declared_m != static_cast<long long>(edges.size())) {
        throw Error(ErrorKind::Parse, "header declares " + std::to_string(declared_m) + " edges, found " +
                                          std::to_string(edges.size()));
    }
    int n = declared_n >= 0 ? declared_n : largest + 1;
    return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path);
    }
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << "p " << g.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

}
