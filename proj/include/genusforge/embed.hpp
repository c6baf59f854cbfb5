#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genusforge/graph.hpp"

namespace genusforge {

// Dart encoding: edge i = (u,v) with u < v owns darts 2i (tail u) and 2i+1
// (tail v); rev(d) = d ^ 1.
struct RotationSystem {
    SimpleGraph graph;
    std::vector<std::vector<int>> rot;  // rot[v] = cyclic order of darts with tail v

    int dart_tail(int d) const {
        const Edge& e = graph.edges[d >> 1];
        return (d & 1) ? e.second : e.first;
    }
    int dart_head(int d) const { return dart_tail(d ^ 1); }
    static int rev(int d) { return d ^ 1; }
};

struct FaceWalk {
    std::vector<int> darts;  // cyclic; walk visits tail(d) for each dart in order
};

// Partition of all darts into face orbits (e_i = pi_{v_i}(e_{i-1}) rule);
// faces ordered by lowest dart. Throws on a disconnected graph.
std::vector<FaceWalk> trace_faces(const RotationSystem& r);

// Euler formula (2 - n + m - f) / 2 for a traced rotation.
int embedding_genus(const RotationSystem& r);

// Exact orientable genus. Decomposes into components and blocks (Theorem-2
// additivity) unless decompose = false, which forces raw whole-component search.
int min_genus(const SimpleGraph& g);
int min_genus(const SimpleGraph& g, bool decompose);

// Decision variant with early exit on the first embedding of genus <= k.
bool embeds_in(const SimpleGraph& g, int k);

// Raw-search genus of one connected graph plus a witness rotation system.
std::pair<int, RotationSystem> min_genus_with_witness(const SimpleGraph& g);

// 1 iff some minimum-genus embedding has a face whose cyclic vertex sequence
// contains x,y,x,y interleaved. 0 when the terminals are separated.
int epsilon(const TerminalGraph& g);

struct AlternatingCertificate {
    RotationSystem rotation;  // of the terminal component, possibly relabelled
    FaceWalk face;
    int x, y;  // terminal ids inside `rotation`
};

// Witness for epsilon = 1; nullopt when epsilon = 0.
std::optional<AlternatingCertificate> alternating_face_certificate(const TerminalGraph& g);

struct ParameterProfile {
    int g = 0, g_plus = 0, theta = 0, epsilon = 0, epsilon_plus = 0, g_a = 0, g_a_plus = 0;

    // Enforces the type invariants (Lemmas 7, 8, 9); throws graph_error on
    // violation, which would indicate an engine bug.
    void validate() const;

    bool operator==(const ParameterProfile& o) const = default;
};

// All seven parameters of G; memoized by canonical code (thread-safe).
ParameterProfile parameter_profile(const TerminalGraph& g);

// eta(G1, G2) = theta1 + theta2 - eps1+ * eps2+  (in {-1, 0, 1, 2}).
int eta(const ParameterProfile& p1, const ParameterProfile& p2);

struct TwoSumResult {
    int genus;
    int epsilon_plus;
    int theta;
};

// Theorem 5: genus (and derived eps+/theta) of the xy-sum from the parts'
// profiles alone. Parts must be connected and xy-free.
TwoSumResult two_sum_genus(const TerminalGraph& g1, const TerminalGraph& g2, bool with_edge);
TwoSumResult two_sum_genus(const ParameterProfile& p1, const ParameterProfile& p2,
                           bool with_edge);

// --- memo / disk cache -------------------------------------------------------

// Clears the in-memory profile and genus memos (mainly for benchmarks).
void clear_memo();

// Loads `path` (if it exists) into the profile memo and arranges for new
// profiles to be appended on flush. Lines: `code_hex g g+ theta eps eps+`;
// corrupt lines are skipped with a warning on stderr. An empty optional
// disables the disk cache. GENUSFORGE_CACHE is honored by the CLI layer.
void set_profile_cache_path(const std::optional<std::string>& path);
void flush_profile_cache();

}  // namespace genusforge
