#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

#include "leafage/asteroidal.hpp"
#include "leafage/error.hpp"
#include "leafage/generators.hpp"
#include "leafage/io.hpp"
#include "leafage/leafage.hpp"
#include "leafage/poset.hpp"
#include "leafage/proper.hpp"

using namespace leafage;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, PropertyFailure = 1, ParseFailure = 2, CapFailure = 3 };

int exit_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::BadParams:
            return ParseFailure;
        case ErrorKind::CapExceeded:
            return CapFailure;
        default:
            return PropertyFailure;
    }
}

struct Caps {
    int max_cliques = 10;
    int max_simplicial = 20;
    int budget = 8;
    int jobs = 1;
};

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) {
        throw Error(ErrorKind::Parse, "cannot write " + output);
    }
    out << text;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

template <class Report>
json report_json(const Report& r) {
    json doc{{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}, {"method", r.method},
             {"diagnostics", r.diagnostics}};
    if constexpr (requires { r.conditional; }) {
        doc["conditional"] = r.conditional;
    }
    return doc;
}

// Runs part and stores its value, null when the quantity does not apply, or an
// error note; failures are remembered for the exit code.
template <class F>
json guarded(F part, int& status) {
    try {
        return part();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::WrongClass) {
            return nullptr;
        }
        status = std::max(status, exit_for(e.kind()) == CapFailure ? int(CapFailure) : int(PropertyFailure));
        return json{{"error", to_string(e.kind())}, {"message", e.what()}};
    }
}

json ktree_json(const Graph& g, bool connected) {
    if (g.size() == 0 || !connected) {
        return nullptr;
    }
    auto k = ktree_width(g);
    return k ? json(*k) : json(nullptr);
}

int analyze(const std::string& input, const std::string& output, const std::string& certificate,
            const std::string& proper_certificate, const Caps& caps) {
    auto g = read_edge_list(input);
    json doc{{"n", g.size()}, {"m", g.edge_count()}};
    auto verdict = recognize_chordal(g);
    doc["chordal"] = verdict.chordal();
    doc["connected"] = is_connected(g);
    int status = Ok;
    if (!verdict.chordal()) {
        doc["witness_cycle"] = verdict.witness_cycle;
        emit(doc.dump(2) + "\n", output);
        return PropertyFailure;
    }
    bool connected = is_connected(g);
    doc["classes"] = {{"tree", is_tree(g)},
                      {"ktree", ktree_json(g, connected)},
                      {"block", is_block_graph(g)},
                      {"claw_free", is_claw_free(g).claw_free},
                      {"interval", is_interval(g)},
                      {"proper_interval", is_proper_interval(g)},
                      {"two_clique_derived", is_two_clique_derived(g)},
                      {"kite", detect_kite(g).has_value()}};
    doc["simplicial"] = simplicial_vertices(g).size();
    if (!connected || g.size() == 0) {
        emit(doc.dump(2) + "\n", output);
        return PropertyFailure;
    }
    doc["asteroidal"] = guarded(
        [&] {
            auto a = asteroidal_number(g, caps.max_simplicial);
            return json{{"number", a.number}, {"witness", a.witness}, {"method", a.method}};
        },
        status);
    doc["width_P"] = guarded([&] { return json(width(build_msn_poset(g)).width); }, status);
    doc["width_P_restricted"] = guarded([&] { return json(width(build_restricted_poset(g)).width); }, status);

    LeafageOptions leaf_options{caps.max_cliques, caps.max_simplicial, caps.budget};
    ProperOptions proper_options;
    proper_options.budget = caps.budget;
    proper_options.max_cliques = caps.max_cliques;
    proper_options.max_simplicial = caps.max_simplicial;
    auto launch = caps.jobs > 1 ? std::launch::async : std::launch::deferred;
    auto leaf_part = std::async(launch, [&] {
        std::optional<LeafageReport> r;
        json doc = guarded(
            [&] {
                r = leafage::leafage(g, leaf_options);
                return report_json(*r);
            },
            status);
        return std::make_pair(doc, r);
    });
    auto proper_part = std::async(launch, [&] {
        std::optional<ProperReport> r;
        int local = Ok;
        json doc = guarded(
            [&] {
                r = proper_leafage(g, proper_options);
                return report_json(*r);
            },
            local);
        return std::make_tuple(doc, r, local);
    });
    auto [leaf_doc, leaf_report] = leaf_part.get();
    auto [proper_doc, proper_report, proper_status] = proper_part.get();
    status = std::max(status, proper_status);
    doc["leafage"] = leaf_doc;
    doc["proper_leafage"] = proper_doc;
    if (!certificate.empty() && leaf_report && leaf_report->certificate) {
        emit(to_json(*leaf_report->certificate, leaf_report->method, false).dump(2) + "\n", certificate);
    }
    if (!proper_certificate.empty() && proper_report && proper_report->certificate) {
        emit(to_json(*proper_report->certificate, proper_report->method, true).dump(2) + "\n", proper_certificate);
    }
    emit(doc.dump(2) + "\n", output);
    return status;
}

Graph generate(const std::string& family, int n, int k, int max_block, double keep, unsigned long long seed) {
    Rng rng(seed);
    if (family == "tree") return random_tree(n, rng);
    if (family == "ktree") return random_ktree(n, k, rng);
    if (family == "block") return random_block_graph(n, max_block, rng);
    if (family == "kite") return kite(n);
    if (family == "extremal") return extremal_graph(n);
    if (family == "random-chordal") return random_chordal(n, rng, keep);
    if (family == "claw-free") return random_claw_free_chordal(n, rng);
    if (family == "two-clique") return random_two_clique_derived(n, rng);
    throw Error(ErrorKind::BadParams, "unknown family " + family);
}

int verify_command(const std::string& input, const std::string& cert_path, bool proper, bool minimal) {
    auto g = read_edge_list(input);
    auto doc = load_json(cert_path);
    auto rep = representation_from_json(doc);
    std::vector<std::string> violations;
    if (auto v = verify(rep, g); !v) violations.push_back(v.violation);
    if (proper) {
        if (auto v = is_proper(rep); !v) violations.push_back(v.violation);
    }
    if (minimal && violations.empty()) {
        if (auto v = is_minimal(rep, g); !v) violations.push_back(v.violation);
    }
    if (doc.contains("meta") && doc["meta"].contains("leaves") && doc["meta"]["leaves"] != leaf_count(rep)) {
        violations.push_back("meta.leaves does not match the host");
    }
    if (violations.empty()) {
        std::cout << "ok: " << leaf_count(rep) << " leaves\n";
        return Ok;
    }
    std::cout << "violation: " << violations.front() << "\n";
    return PropertyFailure;
}

int export_dot(const std::string& input, const std::string& cert_path, const std::string& output) {
    auto rep = representation_from_json(load_json(cert_path));
    if (!input.empty()) {
        auto g = read_edge_list(input);
        if (auto v = verify(rep, g); !v) {
            std::cerr << "invalid certificate: " << v.violation << "\n";
            return PropertyFailure;
        }
    } else if (!rep.host.is_tree()) {
        std::cerr << "invalid certificate: host is not a tree\n";
        return PropertyFailure;
    }
    emit(to_dot(rep), output);
    return Ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Leafage and proper leafage of chordal graphs"};
    app.require_subcommand(1);
    Caps caps;
    app.add_option("--max-cliques", caps.max_cliques, "clique cap for the exhaustive oracle")->capture_default_str();
    app.add_option("--max-simplicial", caps.max_simplicial, "simplicial cap for the asteroidal search")
        ->capture_default_str();
    app.add_option("--budget", caps.budget, "exhaustive induced-subgraph budget")->capture_default_str();
    app.add_option("--jobs", caps.jobs, "run independent analyses concurrently")->capture_default_str();

    std::string input, output, certificate, proper_certificate;
    auto* analyze_cmd = app.add_subcommand("analyze", "report classes, bounds and leafage values");
    analyze_cmd->add_option("-i,--input", input, "edge list")->required();
    analyze_cmd->add_option("-o,--output", output, "report destination (default stdout)");
    analyze_cmd->add_option("--certificate", certificate, "write the leafage certificate here");
    analyze_cmd->add_option("--proper-certificate", proper_certificate, "write the proper certificate here");

    std::string family;
    int n = 0, k = 2, max_block = 4;
    double keep = 0.5;
    unsigned long long seed = 1;
    auto* generate_cmd = app.add_subcommand("generate", "write a graph from a family as an edge list");
    generate_cmd->add_option("family", family, "tree|ktree|block|kite|extremal|random-chordal|claw-free|two-clique")
        ->required();
    generate_cmd->add_option("-n,--n", n, "order (kite: number of spine edges)")->required();
    generate_cmd->add_option("-k,--k", k, "clique size for ktree")->capture_default_str();
    generate_cmd->add_option("--max-block", max_block, "largest block for block")->capture_default_str();
    generate_cmd->add_option("--keep", keep, "inclusion probability for random-chordal")->capture_default_str();
    generate_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    generate_cmd->add_option("-o,--output", output, "destination (default stdout)");

    bool proper = false, minimal = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    verify_cmd->add_option("-i,--input", input, "edge list")->required();
    verify_cmd->add_option("-c,--certificate", certificate, "certificate JSON")->required();
    verify_cmd->add_flag("--proper", proper, "also require a proper representation");
    verify_cmd->add_flag("--minimal", minimal, "also require a minimal representation");

    auto* dot_cmd = app.add_subcommand("export-dot", "write a certificate's host tree in DOT");
    dot_cmd->add_option("-i,--input", input, "edge list to validate against");
    dot_cmd->add_option("-c,--certificate", certificate, "certificate JSON")->required();
    dot_cmd->add_option("-o,--output", output, "destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : ParseFailure;
    }

    try {
        if (*analyze_cmd) return analyze(input, output, certificate, proper_certificate, caps);
        if (*generate_cmd) {
            emit(format_edge_list(generate(family, n, k, max_block, keep, seed)), output);
            return Ok;
        }
        if (*verify_cmd) return verify_command(input, certificate, proper, minimal);
        if (*dot_cmd) return export_dot(input, certificate, output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.kind());
    }
    return Ok;
}
