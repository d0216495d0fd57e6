// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "../support/fixtures.hpp"
#include "leafage/asteroidal.hpp"
#include "leafage/cliques.hpp"
#include "leafage/error.hpp"
#include "leafage/generators.hpp"
#include "leafage/leafage.hpp"
#include "leafage/poset.hpp"
#include "leafage/proper.hpp"

using namespace leafage;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", number, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

std::string str(long long x) { return std::to_string(x); }

int oracle(const Graph& g) { return oracle_leafage(g, 10).upper; }

// Connected non-clique chordal graphs with at most nine maximal cliques, from every generator.
std::vector<Graph> corpus(int count) {
    Rng rng(20240607);
    std::vector<Graph> out;
    for (int trial = 0; static_cast<int>(out.size()) < count; ++trial) {
        int n = 5 + trial % 8;
        Graph g;
        switch (trial % 6) {
            case 0: g = random_tree(n, rng); break;
            case 1: g = random_ktree(n, 1 + trial % 3, rng); break;
            case 2: g = random_block_graph(n, 4, rng); break;
            case 3: g = random_two_clique_derived(n + 1, rng); break;
            case 4: g = random_chordal(n, rng, 0.4); break;
            default: g = random_chordal(n, rng, 0.7); break;
        }
        if (!is_connected(g) || is_complete(g) || build_clique_structure(g).cliques.size() > 9) continue;
        out.push_back(g);
    }
    return out;
}

void fig1_reproduction() {
    auto g = fixtures::fig1();
    int l = oracle(g);
    int a = asteroidal_number(g).number;
    int wp = width(build_msn_poset(g)).width;
    int wpp = width(build_restricted_poset(g)).width;
    report(1, l == 4 && a == 3 && wp == 6 && wpp == 2,
           "oracle leafage " + str(l) + ", a(G) " + str(a) + ", w(P) " + str(wp) + ", w(P') " + str(wpp));
}

void oracle_concordance(const std::vector<Graph>& graphs) {
    int checks = 0, bad = 0;
    std::map<std::string, int> uses;
    for (auto& g : graphs) {
        int l = oracle(g);
        auto take = [&](const std::string& name, const LeafageReport& r) {
            ++checks;
            ++uses[name];
            if (!r.exact || r.upper != l) ++bad;
        };
        if (is_tree(g)) take("tree", leafage_tree(g));
        if (ktree_width(g)) take("k-tree", leafage_ktree(g));
        if (is_block_graph(g)) take("block", leafage_block_graph(g));
        if (is_two_clique_derived(g)) take("two-clique", leafage_two_clique(g));
    }
    std::string detail = str(graphs.size()) + " graphs, " + str(checks) + " formula checks (";
    for (auto& [name, count] : uses) detail += name + " " + str(count) + ", ";
    detail += "mismatches " + str(bad) + ")";
    report(2, graphs.size() >= 200 && bad == 0 && uses.size() == 4, detail);
}

// When the derived graph is a single vertex every modified simplicial
// neighborhood is that vertex, so P has one element.
int msn_width(const Graph& g) {
    try {
        return width(build_msn_poset(g)).width;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::WrongClass) throw;
        return 1;
    }
}

void bound_sandwich(const std::vector<Graph>& graphs) {
    int bad = 0, clamped = 0;
    for (auto& g : graphs) {
        int l = oracle(g);
        int a = asteroidal_number(g).number;
        int wp = msn_width(g);
        clamped += wp < 2;
        auto b = bounds(g);
        bool ok = a <= l && l <= std::max(2, wp) && b.certificate && verify(*b.certificate, g).ok &&
                  leaf_count(*b.certificate) <= std::max(2, wp);
        bad += !ok;
    }
    report(3, bad == 0,
           str(graphs.size()) + " graphs, violations " + str(bad) + " (w(P) < 2 read as 2 on " + str(clamped) + ")");
}

void extremal_function() {
    bool direct = max_leafage(6) == 3 && max_leafage(8) == 4 && max_leafage(10) == 6;
    bool match = true;
    std::string values;
    for (int n = 4; n <= 9; ++n) {
        int l = oracle(extremal_graph(n));
        match = match && l == max_leafage(n);
        values += " " + str(n) + ":" + str(l);
    }
    report(4, direct && match,
           "max_leafage(6,8,10) = " + str(max_leafage(6)) + "," + str(max_leafage(8)) + "," + str(max_leafage(10)) +
               "; oracle on extremal graphs" + values);
}

void kite_family() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 6; ++n) {
        auto g = kite(n);
        auto rep = kite_proper_representation(n);
        int leaves = leaf_count(rep);
        int cut = cut_decomposition_bound(g);
        ok = ok && verify(rep, g).ok && is_proper(rep).ok && leaves == n + 2 && cut == n + 2;
        detail += " n=" + str(n) + ":" + str(leaves) + "/" + str(cut);
    }
    report(5, ok, "leaves/cut bound" + detail);
}

// Leaf blocks counted directly: maximal cliques holding exactly one vertex whose deletion disconnects.
int leaf_blocks(const Graph& g) {
    std::vector<char> cut(g.size(), 0);
    for (int v = 0; v < g.size(); ++v) cut[v] = components_after_delete(g, VertexSet{v}).size() > 1;
    int leaves = 0;
    for (auto& q : build_clique_structure(g).cliques) {
        int c = 0;
        for (int v : q) c += cut[v];
        leaves += c == 1;
    }
    return leaves;
}

void block_graphs() {
    Rng rng(77);
    int tested = 0, bad = 0, skipped = 0;
    for (int draw = 0; tested < 120; ++draw) {
        auto g = random_block_graph(4 + draw % 11, 2 + draw % 4, rng);
        if (is_complete(g)) continue;
        // Clique trees multiply around cut vertices; keep instances the oracle can enumerate.
        auto cs = build_clique_structure(g);
        if (cs.cliques.size() > 10 || count_max_weight_trees(weighted_clique_graph(cs), 200'001) > 200'000) {
            ++skipped;
            continue;
        }
        ++tested;
        auto proper = proper_leafage(g);
        bool ok = proper.exact && proper.upper == leaf_blocks(g) && proper.certificate &&
                  verify(*proper.certificate, g).ok && is_proper(*proper.certificate).ok;
        auto plain = leafage_block_graph(g);
        int rprime = block_simplicial_cut_vertices(g);
        ok = ok && plain.exact && plain.upper == std::max(2, rprime) && plain.upper == oracle(g);
        bad += !ok;
    }
    report(6, bad == 0,
           str(tested) + " block graphs (n <= 14), failures " + str(bad) + "; " + str(skipped) +
               " drawn graphs skipped for exceeding the oracle's tree budget");
}

int inequivalent_meps(const Graph& g) {
    std::set<VertexSet> classes;
    for (int v : modified_extreme_points(g)) classes.insert(closed_neighborhood(g, v));
    return static_cast<int>(classes.size());
}

void claw_free_equality() {
    Rng rng(78);
    std::vector<Graph> graphs{fixtures::sun3()};
    while (graphs.size() < 61) {
        auto g = random_claw_free_chordal(5 + graphs.size() % 6, rng);
        if (is_connected(g) && !is_complete(g)) graphs.push_back(g);
    }
    int bad = 0;
    for (auto& g : graphs) {
        int l = oracle(g);
        auto star = proper_leafage_claw_free(g);
        int a = asteroidal_number(g).number;
        int m = inequivalent_meps(g);
        bad += !(star.exact && l == star.upper && l == a && l == m);
    }
    report(7, bad == 0, str(graphs.size()) + " graphs including the 3-sun, failures " + str(bad));
}

int matching_width(const NeighborhoodPoset& p) {
    int n = p.size();
    std::vector<int> match_right(n, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int u, std::vector<char>& seen) {
        for (int v = 0; v < n; ++v) {
            if (!p.less(u, v) || seen[v]) continue;
            seen[v] = 1;
            if (match_right[v] < 0 || augment(match_right[v], seen)) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int u = 0; u < n; ++u) {
        std::vector<char> seen(n, 0);
        matched += augment(u, seen);
    }
    return n - matched;
}

void poset_properties() {
    Rng rng(79);
    int bad = 0, trials = 600;
    for (int trial = 0; trial < trials; ++trial) {
        int n = 1 + trial % 12;
        std::bernoulli_distribution coin(0.1 + 0.05 * (trial % 8));
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) rel.emplace_back(i, j);
        auto p = NeighborhoodPoset::from_relation(n, rel);

        std::vector<std::vector<int>> maximum;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) s.push_back(i);
            bool anti = true;
            for (int a : s)
                for (int b : s) anti = anti && !p.less(a, b);
            if (!anti || (!maximum.empty() && s.size() < maximum.front().size())) continue;
            if (!maximum.empty() && s.size() > maximum.front().size()) maximum.clear();
            maximum.push_back(s);
        }
        int brute = static_cast<int>(maximum.front().size());
        bool ok = width(p).width == brute && matching_width(p) == brute;

        auto ap = minimal_maximum_antichain(p);
        ok = ok && static_cast<int>(ap.size()) == brute;
        if (n <= 10) {
            for (auto& other : maximum)
                for (int x : ap)
                    ok = ok && std::any_of(other.begin(), other.end(), [&](int y) { return x == y || p.less(x, y); });
        }
        // Deleting a chain that starts at x in A_P and is part of a minimum decomposition lowers the width.
        for (int x : ap) {
            auto d = dilworth_with_bottom(p, x);
            std::vector<int> keep;
            for (int i = 0; i < n; ++i)
                if (std::find(d.chains[0].begin(), d.chains[0].end(), i) == d.chains[0].end()) keep.push_back(i);
            ok = ok && d.chains[0].front() == x && width(subposet(p, keep).poset).width == brute - 1;
        }
        bad += !ok;
    }
    report(8, bad == 0, str(trials) + " random posets (<= 12 elements), failures " + str(bad));
}

void case_two_arbitration() {
    Rng rng(7);
    int found = 0, bad = 0, statement = 0, proof = 0;
    for (int trial = 0; trial < 5000 && found < 8; ++trial) {
        auto h = random_two_clique_derived(6 + trial % 10, rng);
        if (build_clique_structure(h).cliques.size() > 10) continue;
        auto route = leafage_two_clique(h);
        if (std::find(route.diagnostics.begin(), route.diagnostics.end(), "case 2") == route.diagnostics.end()) continue;
        int wp = width(build_msn_poset(h)).width;
        if (std::max(2, wp - 1) == std::max(2, wp)) continue;
        ++found;
        int l = oracle(h);
        statement += l == wp;
        proof += l == wp - 1;
        bad += leafage::leafage(h).upper != l || (l != wp && l != wp - 1);
    }
    report(9, found >= 5 && bad == 0,
           str(found) + " case-2 instances with distinct candidates; oracle chose w(P) " + str(statement) +
               " times, w(P)-1 " + str(proof) + " times; dispatcher mismatches " + str(bad));
}

}

int main() {
    auto graphs = corpus(240);
    fig1_reproduction();
    oracle_concordance(graphs);
    bound_sandwich(graphs);
    extremal_function();
    kite_family();
    block_graphs();
    claw_free_equality();
    poset_properties();
    case_two_arbitration();
    return failures == 0 ? 0 : 1;
}
