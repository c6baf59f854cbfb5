// Benchmark: OpenMP-parallel kernels against their serial references.
//
//   bench [catalog-file]
//
// Times minor_profiles (serial vs parallel) on a handful of dense parts and
// catalog validation (serial vs parallel) on the shipped building blocks.
// Memos are cleared before every timed run so both sides do the same work.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "genusforge/catalog.hpp"
#include "genusforge/critical.hpp"
#include "genusforge/embed.hpp"
#include "genusforge/graph.hpp"

using namespace genusforge;

#ifndef GF_DATA_DIR
#define GF_DATA_DIR "data"
#endif

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* what, double serial, double parallel) {
    std::printf("%-34s serial %7.3fs   parallel %7.3fs   speedup %.2fx\n", what, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    std::string path =
        argc > 1 ? argv[1] : std::string(GF_DATA_DIR) + "/torus-building-blocks.cat";
    std::printf("workers: %d (0 = library default)\n\n", worker_count());

    // --- minor_profiles on dense two-terminal parts --------------------------
    std::vector<std::pair<const char*, TerminalGraph>> parts;
    parts.emplace_back("K33 (terminals apart)",
                       TerminalGraph(SimpleGraph::complete_bipartite(3, 3), 0, 1));
    parts.emplace_back("K5 minus an edge",
                       TerminalGraph(delete_edge(SimpleGraph::complete(5), {0, 1}), 0, 1));
    {
        TerminalGraph k33(SimpleGraph::complete_bipartite(3, 3), 0, 1);
        parts.emplace_back("2-sum of two K33 parts",
                           xy_sum(k33, k33, SumOrientation::Straight, false));
    }
    parts.emplace_back("K7 minus an edge",
                       TerminalGraph(delete_edge(SimpleGraph::complete(7), {0, 1}), 0, 1));

    for (const auto& [name, g] : parts) {
        clear_memo();
        std::vector<ParameterProfile> a;
        double ts = timed([&] { a = minor_profiles_serial(g); });
        clear_memo();
        std::vector<ParameterProfile> b;
        double tp = timed([&] { b = minor_profiles_parallel(g); });
        if (a != b) {
            std::printf("MISMATCH on %s: parallel kernel disagrees with the reference\n", name);
            return 1;
        }
        report(name, ts, tp);
    }

    // --- catalog validation ---------------------------------------------------
    Catalog c = load_catalog_file(path);
    std::printf("\ncatalog: %s (%zu entries)\n", path.c_str(), c.entries.size());
    ValidationReport ra, rb;
    double vs = timed([&] { ra = validate_catalog_serial(c); });
    double vp = timed([&] { rb = validate_catalog(c); });
    if (ra.ok() != rb.ok() || ra.issues.size() != rb.issues.size()) {
        std::printf("MISMATCH: serial and parallel validation disagree\n");
        return 1;
    }
    report("validate_catalog", vs, vp);
    std::printf("\nkernels agree with their serial references\n");
    return 0;
}
