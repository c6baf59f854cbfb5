#pragma once

#include <string>
#include <vector>

#include "genusforge/catalog.hpp"
#include "genusforge/critical.hpp"
#include "genusforge/graph.hpp"

namespace genusforge {

struct CandidatePair {
    CatalogEntry g1;  // member of C°0(g+)
    CatalogEntry g2;  // connected member of C°0(ga) ∪ C°0(ga+)
};

struct ObstructionRecord {
    SimpleGraph graph;       // the obstruction, terminals forgotten
    TerminalGraph composed;  // same graph with the gluing pair as terminals
    std::string part1_name, part2_name;
    bool with_edge = false;
    SumOrientation orientation = SumOrientation::Straight;
    enum class Verification { None, Formula, Search, Both } verification = Verification::None;
};

struct CountReport {
    int pairs = 0;         // (i) + (ii): expected 81
    int filtered = 0;      // after (iv): expected 76
    int obstructions = 0;  // after dedup: expected 68
    int t2_pairs = 0;      // pairs whose G2 is in T2: expected 18
    int t2_distinct = 0;   // distinct obstructions from those: expected 10

    std::string to_string() const;  // "pairs=81 filtered=76 obstructions=68"
};

// All (G1, G2) with G1 in C°0(g+) and G2 a connected member of
// C°0(ga) ∪ C°0(ga+) — conditions (i) and (ii) of Theorem 24. Requires the
// catalog to have passed validation; throws otherwise.
std::vector<CandidatePair> candidate_pairs(const Catalog& c, const ValidationReport& report);

// Condition (iv): drops pairs with theta(G1) = theta(G2) = 0 whose G2 is not
// in C°0(ga+), i.e. the theta=0 member of C°0(g+) against each T4 graph.
std::vector<CandidatePair> apply_condition_iv(std::vector<CandidatePair> pairs);

// One gluing per pair: with_edge by condition (iii) (xy in E iff G1 not in
// C°0(g) and G2 not in C°0(ga)); orientation straight, which is justified by
// the terminal-exchanging automorphism of every C°0(g+) member (checked).
ObstructionRecord compose(const CandidatePair& pair);

// True iff some automorphism of the underlying graph swaps x and y.
bool has_terminal_exchanging_automorphism(const TerminalGraph& g);

struct EnumerationResult {
    std::vector<ObstructionRecord> records;  // sorted by (n, m, canonical code)
    CountReport counts;
};

// The full Corollary-25 pipeline: 81 pairs -> 76 after (iv) -> compose ->
// dedup by plain canonical code -> 68 records. paranoid = true composes both
// orientations of every pair and requires the same final set. Any count
// mismatch against the paper throws with a diff listing.
EnumerationResult enumerate_torus_c2(const Catalog& c, const ValidationReport& report,
                                     bool paranoid = false);

enum class VerifyMode { Formula, Search, Both };

struct VerificationIssue {
    std::string record;  // "<part1>+<part2>" or a record index tag
    std::string what;
};

struct VerificationReport {
    std::vector<VerificationIssue> issues;
    int formula_checked = 0;
    int search_checked = 0;

    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Formula mode: per record, g = 2 by two_sum_genus, both parts minor-tight
// (Lemma 12 tables), the xy edge tight when present (Lemma 14), the Lemma 21
// facts, connectivity exactly 2, and the lm-dumbbell-no witness (neither part
// in class D). Search mode: is_obstruction(graph, 1) by raw genus search on
// the search_limit smallest records ordered by (m, n); -1 = all. Both = both.
// Marks each record's verification field on success.
VerificationReport verify_all(std::vector<ObstructionRecord>& records, const Catalog& c,
                              VerifyMode mode, int search_limit = -1);

// Multi-record graph text for the enumeration output.
std::string write_records(const std::vector<ObstructionRecord>& records);

// Graphviz rendering of one record (undirected, terminals highlighted).
std::string to_dot(const ObstructionRecord& r, const std::string& name);

}  // namespace genusforge
