// genus-forge command-line interface.
//
// Exit codes: 0 success, 1 domain failure (verification discrepancy, invalid
// catalog, graph is not an obstruction), 2 usage or input parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genusforge/catalog.hpp"
#include "genusforge/critical.hpp"
#include "genusforge/embed.hpp"
#include "genusforge/graph.hpp"
#include "genusforge/iso.hpp"
#include "genusforge/torus.hpp"

using namespace genusforge;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TerminalGraph load_graph(const std::string& path, bool* has_terminals) {
    std::string text = slurp(path);
    size_t pos = 0;
    try {
        return parse_graph(text, &pos, has_terminals);
    } catch (const graph_error& e) {
        throw graph_error(path + ": " + e.what());
    }
}

void print_profile(const ParameterProfile& p) {
    std::cout << "g=" << p.g << " g+=" << p.g_plus << " theta=" << p.theta << " eps=" << p.epsilon
              << " eps+=" << p.epsilon_plus << " ga=" << p.g_a << " ga+=" << p.g_a_plus << '\n';
}

ParameterProfile parse_profile_arg(const std::string& s) {
    std::istringstream is(s);
    ParameterProfile p;
    if (!(is >> p.g >> p.g_plus >> p.theta >> p.epsilon >> p.epsilon_plus >> p.g_a >> p.g_a_plus))
        throw graph_error("partner profile needs 7 integers: g g+ theta eps eps+ ga ga+");
    p.validate();
    return p;
}

int run(int argc, char** argv) {
    CLI::App app{"genus-forge: exact orientable genus and obstruction engine for small "
                 "two-terminal graphs"};
    app.require_subcommand(1);

    int workers = 0;
    std::optional<std::string> cache_path;
    app.add_option("--workers", workers, "worker threads for parallel kernels (1 = serial)");
    app.add_option("--cache", cache_path, "profile cache file (also: GENUSFORGE_CACHE)");

    // genus FILE
    auto* cmd_genus = app.add_subcommand("genus", "minimum orientable genus of a graph");
    std::string genus_file;
    bool no_decompose = false, witness = false;
    cmd_genus->add_option("file", genus_file, "graph file")->required();
    cmd_genus->add_flag("--no-decompose", no_decompose, "raw whole-graph search");
    cmd_genus->add_flag("--witness", witness, "also print a minimum-genus rotation system");

    // profile FILE
    auto* cmd_profile = app.add_subcommand("profile", "the seven-parameter profile");
    std::string profile_file;
    cmd_profile->add_option("file", profile_file, "two-terminal graph file")->required();

    // classify FILE (--partner FILE | --partner-profile "...") [--with-edge]
    auto* cmd_classify =
        app.add_subcommand("classify", "Table-3 class labels of a minor-tight 2-sum part");
    std::string classify_file, partner_file, partner_profile;
    bool with_edge = false;
    cmd_classify->add_option("file", classify_file, "part graph file")->required();
    auto* po = cmd_classify->add_option("--partner", partner_file, "partner part graph file");
    auto* pp = cmd_classify->add_option("--partner-profile", partner_profile,
                                        "partner profile: 'g g+ theta eps eps+ ga ga+'");
    po->excludes(pp);
    cmd_classify->add_flag("--with-edge", with_edge, "the sum carries the xy edge");

    // verify-obstruction FILE [--genus k]
    auto* cmd_verify = app.add_subcommand("verify-obstruction", "Lemma-1 obstruction check");
    std::string verify_file;
    int verify_k = 1;
    cmd_verify->add_option("file", verify_file, "graph file")->required();
    cmd_verify->add_option("--genus", verify_k, "surface genus k (default 1, the torus)");

    // validate-catalog FILE
    auto* cmd_validate = app.add_subcommand("validate-catalog", "full catalog validation");
    std::string catalog_file = "data/torus-building-blocks.cat";
    cmd_validate->add_option("file", catalog_file, "catalog file")->required();

    // enumerate-torus [--catalog FILE] [--paranoid] [--verify MODE] [--emit FMT] [--out PATH]
    auto* cmd_enum =
        app.add_subcommand("enumerate-torus", "all 68 connectivity-2 torus obstructions");
    std::string enum_catalog = "data/torus-building-blocks.cat";
    std::string verify_mode = "none", emit, out_path;
    bool paranoid = false;
    int search_limit = 10;
    cmd_enum->add_option("--catalog", enum_catalog, "building-block catalog file");
    cmd_enum->add_flag("--paranoid", paranoid, "compose all gluings, not just the straight one");
    cmd_enum->add_option("--verify", verify_mode, "record verification: none|formula|search|both")
        ->check(CLI::IsMember({"none", "formula", "search", "both"}));
    cmd_enum->add_option("--search-limit", search_limit,
                         "verify this many smallest records by direct search (-1 = all)");
    cmd_enum->add_option("--emit", emit, "write records as 'cat' (graph text) or 'dot'")
        ->check(CLI::IsMember({"cat", "dot"}));
    cmd_enum->add_option("--out", out_path, "output file ('cat') or directory ('dot')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help/usage as appropriate
        return code == 0 ? 0 : 2;
    }

    set_worker_count(workers);
    if (!cache_path) {
        if (const char* env = std::getenv("GENUSFORGE_CACHE")) cache_path = env;
    }
    if (cache_path) set_profile_cache_path(cache_path);
    struct FlushGuard {
        ~FlushGuard() { flush_profile_cache(); }
    } flush_guard;

    if (*cmd_genus) {
        bool has_terminals = false;
        TerminalGraph g = load_graph(genus_file, &has_terminals);
        if (witness) {
            auto [genus, rot] = min_genus_with_witness(g.graph);
            std::cout << genus << '\n';
            for (int v = 0; v < rot.graph.n; ++v) {
                std::cout << "rot " << v << ":";
                for (int d : rot.rot[v]) std::cout << ' ' << rot.dart_head(d);
                std::cout << '\n';
            }
        } else {
            std::cout << min_genus(g.graph, !no_decompose) << '\n';
        }
        return 0;
    }

    if (*cmd_profile) {
        print_profile(parameter_profile(load_graph(profile_file, nullptr)));
        return 0;
    }

    if (*cmd_classify) {
        TerminalGraph part = load_graph(classify_file, nullptr);
        ParameterProfile p2;
        if (!partner_file.empty()) p2 = parameter_profile(load_graph(partner_file, nullptr));
        else if (!partner_profile.empty()) p2 = parse_profile_arg(partner_profile);
        else throw graph_error("classify needs --partner or --partner-profile");
        std::vector<ClassLabel> labels = classify_part(part, p2, with_edge);
        if (labels.empty()) {
            std::cout << "not minor-tight\n";
        } else {
            for (const ClassLabel& l : labels)
                std::cout << class_kind_name(l.kind) << " k=" << l.k << '\n';
        }
        return 0;
    }

    if (*cmd_verify) {
        TerminalGraph g = load_graph(verify_file, nullptr);
        bool ok = is_obstruction(g.graph, verify_k);
        std::cout << (ok ? "obstruction" : "not an obstruction") << " for genus " << verify_k
                  << '\n';
        return ok ? 0 : 1;
    }

    if (*cmd_validate) {
        Catalog c = load_catalog_file(catalog_file);
        ValidationReport rep = validate_catalog(c);
        std::cout << rep.to_string();
        return rep.ok() ? 0 : 1;
    }

    if (*cmd_enum) {
        Catalog c = load_catalog_file(enum_catalog);
        ValidationReport vrep = validate_catalog(c);
        if (!vrep.ok()) {
            std::cout << vrep.to_string();
            return 1;
        }
        EnumerationResult res = enumerate_torus_c2(c, vrep, paranoid);
        int rc = 0;
        if (verify_mode != "none") {
            VerifyMode m = verify_mode == "formula"  ? VerifyMode::Formula
                           : verify_mode == "search" ? VerifyMode::Search
                                                     : VerifyMode::Both;
            VerificationReport rep = verify_all(res.records, c, m, search_limit);
            std::cout << rep.to_string();
            if (!rep.ok()) rc = 1;
        }
        for (const ObstructionRecord& r : res.records)
            std::cout << r.part1_name << "+" << r.part2_name << (r.with_edge ? "+xy" : "")
                      << " n=" << r.graph.n << " m=" << r.graph.edge_count() << '\n';
        std::cout << res.counts.to_string() << '\n';
        std::cout << "t2-pairs=" << res.counts.t2_pairs
                  << " t2-distinct=" << res.counts.t2_distinct << '\n';
        if (emit == "cat") {
            std::string text = write_records(res.records);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw graph_error("cannot write " + out_path);
                out << text;
            }
        } else if (emit == "dot") {
            std::string dir = out_path.empty() ? "." : out_path;
            for (size_t i = 0; i < res.records.size(); ++i) {
                const ObstructionRecord& r = res.records[i];
                std::ostringstream name;
                name << "obstruction-" << (i < 9 ? "0" : "") << i + 1 << "-" << r.part1_name << "+"
                     << r.part2_name;
                std::ofstream out(dir + "/" + name.str() + ".dot");
                if (!out) throw graph_error("cannot write into " + dir);
                out << to_dot(r, name.str());
            }
        }
        return rc;
    }
    return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const graph_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
