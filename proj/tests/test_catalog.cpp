#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "genusforge/catalog.hpp"
#include "genusforge/critical.hpp"
#include "genusforge/embed.hpp"
#include "genusforge/graph.hpp"
#include "genusforge/iso.hpp"
#include "genusforge/planarity.hpp"

using namespace genusforge;

#ifndef GF_DATA_DIR
#define GF_DATA_DIR "data"
#endif

namespace {

const Catalog& shipped() {
    static Catalog c = load_catalog_file(std::string(GF_DATA_DIR) + "/torus-building-blocks.cat");
    return c;
}

const ValidationReport& shipped_report() {
    static ValidationReport r = validate_catalog(shipped());
    return r;
}

TerminalGraph k33_nonadj() {
    return TerminalGraph(SimpleGraph::complete_bipartite(3, 3), 0, 1);
}

}  // namespace

TEST_CASE("builtin Kuratowski graphs") {
    auto ks = builtin_kuratowski();
    REQUIRE(ks.size() == 2);
    CHECK(ks[0].n == 5);
    CHECK(ks[0].edge_count() == 10);
    CHECK(ks[1].n == 6);
    CHECK(ks[1].edge_count() == 9);
    for (const auto& k : ks) CHECK(is_obstruction(k, 0));
}

TEST_CASE("base classes from Kuratowski placements") {
    Catalog cg = build_c0_g();
    REQUIRE(cg.entries.size() == 1);
    CHECK(are_isomorphic(cg.entries[0].graph, k33_nonadj()));

    Catalog cgp = build_c0_gplus();
    REQUIRE(cgp.entries.size() == 3);
    int theta0 = 0;
    bool has_k5_gap = false;
    for (const auto& e : cgp.entries) {
        ParameterProfile p = parameter_profile(e.graph);
        theta0 += p.theta == 0;
        if (e.graph.graph.n == 5 && e.graph.graph.edge_count() == 9) has_k5_gap = true;
    }
    CHECK(theta0 == 1);
    CHECK(has_k5_gap);
}

TEST_CASE("generated T1: disconnected members of the intersection") {
    Catalog t1 = generate_T1();
    CHECK(!t1.entries.empty());
    for (const auto& e : t1.entries) {
        CHECK(!e.graph.graph.is_connected());
        CHECK(e.has_class("C0ga"));
        CHECK(e.has_class("C0ga+"));
    }
}

TEST_CASE("generated T2: six xy-sums of Kuratowski parts, genus 1") {
    Catalog t2 = generate_T2();
    REQUIRE(t2.entries.size() == 6);
    // the 2-sum of two K5's appears
    TerminalGraph k5gap(delete_edge(SimpleGraph::complete(5), {0, 1}), 0, 1);
    TerminalGraph two_k5 = xy_sum(k5gap, k5gap, SumOrientation::Straight, false);
    std::string want = canonical_code(two_k5);
    bool found = false;
    for (const auto& e : t2.entries) {
        ParameterProfile p = parameter_profile(e.graph);
        CHECK(p.g == 1);
        CHECK(p.g_plus == 1);
        if (canonical_code(e.graph) == want) found = true;
    }
    CHECK(found);
}

TEST_CASE("generated T5: planar splits with G+ in C0(ga)") {
    Catalog t5 = generate_T5();
    CHECK(t5.entries.size() == 3);
    for (const auto& e : t5.entries) {
        CHECK(is_planar(e.graph.graph));
        ClassMembership m = class_membership(with_xy_edge(e.graph), Parameter::g_a, true);
        CHECK(m.member);
        CHECK(m.k == 0);
    }
}

TEST_CASE("catalog text format round-trips") {
    const Catalog& c = shipped();
    std::string text = write_catalog(c);
    Catalog again = parse_catalog(text);
    REQUIRE(again.entries.size() == c.entries.size());
    for (size_t i = 0; i < c.entries.size(); ++i) {
        CHECK(again.entries[i].name == c.entries[i].name);
        CHECK(again.entries[i].classes == c.entries[i].classes);
        CHECK(again.entries[i].graph == c.entries[i].graph);
    }
    CHECK(write_catalog(again) == text);
}

TEST_CASE("catalog parse errors carry line numbers") {
    std::string ok = "# genus-forge catalog v1\n\nname A\nclasses C0g\n3 1 0 1\n0 2\n";
    CHECK(parse_catalog(ok).entries.size() == 1);

    CHECK_THROWS_WITH_AS(parse_catalog("# genus-forge catalog v1\n\nname A\nclasses Cbogus\n"),
                         doctest::Contains("line 4"), graph_error);
    CHECK_THROWS_WITH_AS(
        parse_catalog("# genus-forge catalog v1\n\nname A\nclasses C0g\n3 1 0 1\n0 2\n\n"
                      "name A\nclasses C0g\n3 1 0 1\n0 2\n"),
        doctest::Contains("duplicate"), graph_error);
    CHECK_THROWS_AS(parse_catalog("no header\n"), graph_error);
    CHECK_THROWS_WITH_AS(parse_catalog("# genus-forge catalog v1\nname A\nclasses C0g\n3 9 0 1\n"),
                         doctest::Contains("line"), graph_error);
}

TEST_CASE("terminal minor containment") {
    TerminalGraph k33 = k33_nonadj();
    CHECK(has_terminal_minor(k33, k33));
    // K33-apart is a terminal minor of any T2 sum built from it
    TerminalGraph sum = xy_sum(k33, k33, SumOrientation::Straight, false);
    CHECK(has_terminal_minor(sum, k33));
    // ...but not vice versa
    CHECK(!has_terminal_minor(k33, sum));
    // a triangle with terminals is not inside a path
    TerminalGraph tri(SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}}), 0, 1);
    TerminalGraph path(SimpleGraph(4, {{0, 2}, {2, 3}, {1, 3}}), 0, 1);
    CHECK(!has_terminal_minor(path, tri));
}

TEST_CASE("shipped catalog validates with zero discrepancies") {
    const ValidationReport& rep = shipped_report();
    for (const auto& i : rep.issues) {
        CAPTURE(i.entry);
        CAPTURE(i.what);
        CHECK(false);
    }
    CHECK(rep.ok());
    CHECK(rep.t_count[4] == 5);
    CHECK(rep.t_count[2] == 6);
    CHECK(rep.t_count[3] == 11);
    CHECK(rep.t_count[6] == 2);
    CHECK(rep.connected_union == 27);
}

namespace {

// build_c0_gplus tags only C0g+; the theta=0 member is also the C0g graph and
// strict validation demands every verified membership be claimed.
Catalog base_with_full_tags() {
    Catalog c = build_c0_gplus();
    for (auto& e : c.entries)
        if (parameter_profile(e.graph).theta == 0) e.classes.insert(e.classes.begin(), "C0g");
    return c;
}

}  // namespace

TEST_CASE("validation is isomorphism-invariant: swapped terminals still pass") {
    Catalog small;
    for (const auto& e : base_with_full_tags().entries) {
        CatalogEntry swapped = e;
        swapped.graph = TerminalGraph(e.graph.graph, e.graph.y, e.graph.x);
        small.entries.push_back(swapped);
    }
    ValidationReport rep = validate_catalog(small);
    for (const auto& i : rep.issues) {
        CAPTURE(i.entry);
        CAPTURE(i.what);
    }
    CHECK(rep.ok());
}

TEST_CASE("fault injection: corrupted entry is reported by name") {
    Catalog broken = base_with_full_tags();
    // flip one edge of the first entry
    SimpleGraph g = broken.entries[0].graph.graph;
    Edge gone = g.edges[2];
    g.remove_edge(gone.first, gone.second);
    broken.entries[0].graph = TerminalGraph(g, broken.entries[0].graph.x,
                                            broken.entries[0].graph.y);
    ValidationReport rep = validate_catalog(broken);
    CHECK(!rep.ok());
    bool named = false;
    for (const auto& i : rep.issues) named |= i.entry == broken.entries[0].name;
    CHECK(named);
}

TEST_CASE("serial and parallel validation agree") {
    Catalog small = base_with_full_tags();
    ValidationReport a = validate_catalog_serial(small);
    ValidationReport b = validate_catalog(small);
    CHECK(a.ok() == b.ok());
    CHECK(a.issues.size() == b.issues.size());
}
