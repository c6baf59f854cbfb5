#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genusforge/critical.hpp"
#include "genusforge/graph.hpp"

namespace genusforge {

// Class tags used in catalog files: C0g, C0g+, C0ga, C0ga+, T1..T6.
bool is_known_class_tag(const std::string& tag);

struct CatalogEntry {
    std::string name;
    TerminalGraph graph;
    std::vector<std::string> classes;  // sorted, unique tags
    enum class Source { FigureTranscription, Generated } source = Source::Generated;

    bool has_class(const std::string& tag) const;
};

struct Catalog {
    std::string version = "# genus-forge catalog v1";
    std::vector<CatalogEntry> entries;

    const CatalogEntry* find(const std::string& name) const;
    std::vector<const CatalogEntry*> with_class(const std::string& tag) const;
};

// The two obstructions for the sphere.
std::vector<SimpleGraph> builtin_kuratowski();

// Terminal-placed Kuratowski parts: every placement of (x, y) on K5/K33 up to
// isomorphism, with the xy edge removed when present (the gap placements).
std::vector<TerminalGraph> kuratowski_parts();

// C°0(g) (exactly 1 graph) and C°0(g+) (exactly 3) built from the Kuratowski
// candidates and verified by class membership; wrong counts are hard errors.
Catalog build_c0_g();
Catalog build_c0_gplus();

// T1: Kuratowski graph plus one or two isolated terminal vertices, all
// placements up to isomorphism, filtered by C°0(ga) membership.
Catalog generate_T1();

// T2: xy-sums (both orientations, no xy edge) of pairs of terminal-placed
// Kuratowski parts that land in C°0(ga) ∩ C°0(ga+); deduplicated; size 6.
Catalog generate_T2();

// T5: splits of a Kuratowski vertex into two nonadjacent terminals, filtered
// by C°0(ga+) \ C°0(ga); deduplicated.
Catalog generate_T5();

// Catalog text format: header "# genus-forge catalog v1"; per entry
//   name <string>
//   classes <comma-separated tags>
//   <graph record in the graph text format>
// entries separated by blank lines. Throws graph_error with a line number on
// malformed input, unknown tags, or duplicate names.
Catalog parse_catalog(const std::string& text);
std::string write_catalog(const Catalog& c);

Catalog load_catalog_file(const std::string& path);

// Terminal-preserving minor test: can `target` be reached from g by edge
// deletions/contractions (and discarding isolated vertices)? Both graphs stay
// in the two-terminal world; matching is by terminal canonical code.
bool has_terminal_minor(const TerminalGraph& g, const TerminalGraph& target);

struct ValidationIssue {
    std::string entry;  // entry name, or "-" for catalog-level issues
    std::string what;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    int t_count[7] = {0, 0, 0, 0, 0, 0, 0};  // t_count[i] = |Ti|, index 0 unused
    int connected_union = 0;  // connected members of C°0(ga) ∪ C°0(ga+)

    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Recomputes every entry's profile and memberships from scratch, checks the
// claimed tags, Corollary-17 facts, the T-class partition (Lemma 23), the
// counts |T4| = 5 and 27 connected union members, agreement of T2/T5 with
// their generators, and the named T6-minor facts for T4. Entries with at most
// 11 vertices are additionally cross-validated with the raw (no-decompose)
// genus search. Parallel over entries; the report is ordered by entry.
ValidationReport validate_catalog(const Catalog& c);
ValidationReport validate_catalog_serial(const Catalog& c);

}  // namespace genusforge
