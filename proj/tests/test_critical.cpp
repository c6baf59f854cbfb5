#include "doctest.h"
#include "genusforge/critical.hpp"
#include "genusforge/embed.hpp"
#include "genusforge/graph.hpp"

#include <random>

using namespace genusforge;

namespace {

TerminalGraph k33_nonadj() {
    return TerminalGraph(SimpleGraph::complete_bipartite(3, 3), 0, 1);
}

TerminalGraph k5_gap() {
    SimpleGraph g = SimpleGraph::complete(5);
    g.remove_edge(0, 1);
    return TerminalGraph(std::move(g), 0, 1);
}

TerminalGraph k33_gap() {
    SimpleGraph g = SimpleGraph::complete_bipartite(3, 3);
    g.remove_edge(0, 3);
    return TerminalGraph(std::move(g), 0, 3);
}

TerminalGraph path4() {
    return TerminalGraph(SimpleGraph(4, {{0, 2}, {2, 3}, {1, 3}}), 0, 1);
}

// theta2 = 1, eps2+ = 0 (profile of a plausible torus-level part)
ParameterProfile p2_eps0() {
    ParameterProfile p;
    p.g = 1;
    p.g_plus = 2;
    p.theta = 1;
    p.epsilon = 0;
    p.epsilon_plus = 0;
    p.g_a = 1;
    p.g_a_plus = 2;
    p.validate();
    return p;
}

// theta2 = 0, eps2+ = 1 (the K33-nonadjacent shape)
ParameterProfile p2_eps1() {
    ParameterProfile p;
    p.g = 1;
    p.g_plus = 1;
    p.theta = 0;
    p.epsilon = 1;
    p.epsilon_plus = 1;
    p.g_a = 0;
    p.g_a_plus = 0;
    p.validate();
    return p;
}

SimpleGraph random_connected(std::mt19937& rng, int n, double p) {
    for (;;) {
        SimpleGraph g(n);
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (g.is_connected()) return g;
    }
}

// Two random connected parts joined by a single bar; terminals inside the parts.
TerminalGraph random_dumbbell(std::mt19937& rng, int na, int nb) {
    SimpleGraph a = random_connected(rng, na, 0.6);
    SimpleGraph b = random_connected(rng, nb, 0.6);
    SimpleGraph g(na + nb);
    for (auto [u, v] : a.edges) g.add_edge(u, v);
    for (auto [u, v] : b.edges) g.add_edge(u + na, v + na);
    int u = static_cast<int>(rng() % na);
    int v = na + static_cast<int>(rng() % nb);
    g.add_edge(u, v);
    int x = static_cast<int>(rng() % na);
    int y = na + static_cast<int>(rng() % nb);
    return TerminalGraph(std::move(g), x, y);
}

TerminalGraph two_k5_dumbbell() {
    SimpleGraph g(10);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            g.add_edge(u, v);
            g.add_edge(u + 5, v + 5);
        }
    g.add_edge(4, 9);
    return TerminalGraph(std::move(g), 0, 5);
}

}  // namespace

TEST_CASE("decreasing sets on the base graphs") {
    TerminalGraph k33 = k33_nonadj();
    DecreaseSet all = decreasing_set(k33, Parameter::g, 1);
    auto ops = minor_operations(k33);
    CHECK(all.operations.size() == 18);
    CHECK(all.operations == ops);
    for (const auto& op : ops) CHECK(all.contains(op));

    DecreaseSet none = decreasing_set(path4(), Parameter::g, 1);
    CHECK(none.operations.empty());
    CHECK(decreasing_set(path4(), Parameter::g_a_plus, 1).operations.empty());
    CHECK(!none.contains(ops[0]));

    CHECK_THROWS_AS(decreasing_set(k33, Parameter::g, 0), graph_error);
}

TEST_CASE("base critical classes: one in C0(g), three in C0(g+)") {
    ClassMembership m = class_membership(k33_nonadj(), Parameter::g);
    CHECK(m.member);
    CHECK(m.k == 0);

    int theta0 = 0;
    for (TerminalGraph g : {k5_gap(), k33_gap(), k33_nonadj()}) {
        ClassMembership p = class_membership(g, Parameter::g_plus);
        CHECK(p.member);
        CHECK(p.k == 0);
        theta0 += parameter_profile(g).theta == 0 ? 1 : 0;
    }
    CHECK(theta0 == 1);  // only the nonadjacent K33 has theta = 0

    CHECK(!class_membership(k5_gap(), Parameter::g).member);
    CHECK(!class_membership(path4(), Parameter::g).member);

    // xy present: C-variant works, C°-variant refuses
    TerminalGraph k5(SimpleGraph::complete(5), 0, 1);
    CHECK_THROWS_AS(class_membership(k5, Parameter::g), graph_error);
    ClassMembership c = class_membership(k5, Parameter::g, true);
    CHECK(c.member);
    CHECK(c.k == 0);
}

TEST_CASE("obstruction recognition") {
    CHECK(is_obstruction(SimpleGraph::complete(5), 0));
    CHECK(is_obstruction(SimpleGraph::complete_bipartite(3, 3), 0));
    SimpleGraph k5e = SimpleGraph::complete(5);
    k5e.remove_edge(0, 1);
    CHECK(!is_obstruction(k5e, 0));
    CHECK(!is_obstruction(SimpleGraph::complete(6), 0));
    CHECK(!is_obstruction(SimpleGraph::complete(5), 1));

    // K5 and K5 sharing one vertex: a classic connectivity-1 torus obstruction
    SimpleGraph shared(9);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            shared.add_edge(u, v);
            shared.add_edge(u == 0 ? 0 : u + 4, v + 4);
        }
    CHECK(is_obstruction(shared, 1));

    // two disjoint K5: obstruction for the torus as well
    SimpleGraph two(10);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            two.add_edge(u, v);
            two.add_edge(u + 5, v + 5);
        }
    CHECK(is_obstruction(two, 1));
}

TEST_CASE("minor-tight parts by Table 1 rows") {
    // with edge, eps2+ = 0: the row demands M(G1) = dc1 g+
    CHECK(part_is_minor_tight(k5_gap(), p2_eps0(), true));
    CHECK(part_is_minor_tight(k5_gap(), p2_eps0(), true, /*cross_check=*/true));
    CHECK(part_is_minor_tight(k33_gap(), p2_eps0(), true, true));

    // no edge, eta = 2 (theta1 = theta2 = 1, eps+ product 0): needs dc1 g, g=0 fails
    CHECK(!part_is_minor_tight(k5_gap(), p2_eps0(), false, true));

    // K33 nonadjacent against theta2=1, eps2+=0: eta = 1, row dc1 g ∪ dc1 g+
    CHECK(part_is_minor_tight(k33_nonadj(), p2_eps0(), false, true));

    // eta = -1 row demands dc1 ga+, but ga+ = 0
    CHECK(!part_is_minor_tight(k33_nonadj(), p2_eps1(), false, true));

    // a path decreases nothing
    CHECK(!part_is_minor_tight(path4(), p2_eps0(), true));
    CHECK(!part_is_minor_tight(path4(), p2_eps1(), false));

    TerminalGraph k5(SimpleGraph::complete(5), 0, 1);
    CHECK_THROWS_AS(part_is_minor_tight(k5, p2_eps0(), true), graph_error);
}

TEST_CASE("xy edge tightness arithmetic") {
    ParameterProfile a = p2_eps0();  // theta 1, eps+ 0
    CHECK(eta(a, a) == 2);
    CHECK(xy_edge_is_tight(a, 1, a, 1));        // g(G1/xy) = 1 < g+ = 2
    CHECK(!xy_edge_is_tight(a, 2, a, 2));       // both quotients reach g+
    ParameterProfile b = p2_eps1();
    CHECK(eta(a, b) == 1);
    CHECK(!xy_edge_is_tight(a, 0, b, 0));       // eta != 2
}

TEST_CASE("dumbbells: Lemma 13 facts and class D") {
    CHECK(!dumbbell_class_D(k33_nonadj()));
    CHECK(!dumbbell_class_D(path4()));

    // two bars in a row: uniqueness fails
    SimpleGraph chain(11);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            chain.add_edge(u, v);
            chain.add_edge(u + 6, v + 6);
        }
    chain.add_edge(4, 5);
    chain.add_edge(5, 6);
    TerminalGraph two_bars(std::move(chain), 0, 6);
    CHECK(bars(two_bars).size() == 2);
    CHECK(!dumbbell_class_D(two_bars));

    // class D on a concrete dumbbell agrees with evaluating the definition
    TerminalGraph db = two_k5_dumbbell();
    Edge b = bars(db)[0];
    ParameterProfile p = parameter_profile(db);
    bool manual = p.theta == 0 &&
                  parameter_profile(contract_edge(db, b)).epsilon_plus == 1;
    if (manual) {
        DecreaseSet dg = decreasing_set(db, Parameter::g, 1);
        for (const auto& op : minor_operations(db))
            if (op.edge != b) manual = manual && dg.contains(op);
    }
    CHECK(dumbbell_class_D(db) == manual);

    // Lemma 13 on seeded random dumbbells: eps+ = 0, bar contraction is in
    // neither dc1 g nor dc1 g+
    std::mt19937 rng(1337);
    for (int trial = 0; trial < 6; ++trial) {
        TerminalGraph d = random_dumbbell(rng, 4 + static_cast<int>(rng() % 2), 4);
        REQUIRE(!bars(d).empty());
        ParameterProfile pd = parameter_profile(d);
        CHECK(pd.epsilon_plus == 0);
        for (Edge bar : bars(d)) {
            MinorOperation contract{bar, MinorKind::Contract};
            CHECK(!decreasing_set(d, Parameter::g, 1).contains(contract));
            CHECK(!decreasing_set(d, Parameter::g_plus, 1).contains(contract));
        }
    }
}

TEST_CASE("hopper detectors stay silent on known graphs") {
    CHECK(!hopper_level(k33_nonadj()).has_value());
    CHECK(!hopper_level(k5_gap()).has_value());
    CHECK(!hopper_level(k33_gap()).has_value());
    CHECK(!hopper_level(path4()).has_value());
    CHECK_THROWS_AS(hopper_level(TerminalGraph(SimpleGraph::complete(5), 0, 1)), graph_error);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        SimpleGraph g = random_connected(rng, 6, 0.5);
        TerminalGraph t(g, 0, 1);
        if (t.has_xy_edge()) t.graph.remove_edge(0, 1);
        CHECK(!hopper_level(t).has_value());
    }
}

TEST_CASE("the Table-3 classifier returns verified labels") {
    auto labels = classify_part(k5_gap(), p2_eps0(), true);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].kind == ClassKind::CgPlus);
    CHECK(labels[0].k == 0);

    // eta = 1, eps2+ = 0: K33 nonadjacent lands in both C°(g) and C°(g+)
    auto both = classify_part(k33_nonadj(), p2_eps0(), false);
    REQUIRE(both.size() == 2);
    CHECK(both[0].kind == ClassKind::Cg);
    CHECK(both[1].kind == ClassKind::CgPlus);

    CHECK(classify_part(path4(), p2_eps0(), true).empty());
}

TEST_CASE("class label names round-trip") {
    for (ClassKind k : {ClassKind::Cg, ClassKind::CgPlus, ClassKind::Cga, ClassKind::CgaPlus,
                        ClassKind::D, ClassKind::H0, ClassKind::H1, ClassKind::H2})
        CHECK(class_kind_from_name(class_kind_name(k)) == k);
    CHECK(!class_kind_from_name("bogus").has_value());
}

TEST_CASE("1-separation properties S1-S3 and Corollary 11") {
    std::mt19937 rng(2024);
    struct Pair {
        Parameter p, q;  // P <= Q <= P + 1
        int (*sep)(const ParameterProfile&);
    };
    const Pair pairs[] = {
        {Parameter::g, Parameter::g_plus, [](const ParameterProfile& p) { return p.theta; }},
        {Parameter::g_a, Parameter::g, [](const ParameterProfile& p) { return p.epsilon; }},
        {Parameter::g_a_plus, Parameter::g_plus,
         [](const ParameterProfile& p) { return p.epsilon_plus; }},
        {Parameter::g_a, Parameter::g_a_plus,
         [](const ParameterProfile& p) { return p.epsilon + p.theta - p.epsilon_plus; }},
    };
    int checked = 0;
    while (checked < 8) {
        SimpleGraph g = random_connected(rng, 5 + static_cast<int>(rng() % 3), 0.5);
        TerminalGraph t(g, 0, 1);
        if (t.has_xy_edge()) continue;
        ParameterProfile base = parameter_profile(t);
        auto subset = [](const DecreaseSet& a, const DecreaseSet& b) {
            for (const auto& op : a.operations)
                if (!b.contains(op)) return false;
            return true;
        };
        for (const Pair& pr : pairs) {
            for (int k = 1; k <= 2; ++k) {
                DecreaseSet dp = decreasing_set(t, pr.p, k);
                DecreaseSet dq = decreasing_set(t, pr.q, k);
                int L = pr.sep(base);
                if (L == 1) CHECK(subset(dp, dq));  // (S1)
                if (L == 0) CHECK(subset(dq, dp));  // (S2)
                // (S3)
                CHECK(subset(decreasing_set(t, pr.p, k + 1), dq));
                CHECK(subset(decreasing_set(t, pr.q, k + 1), dp));
            }
        }
        // Corollary 11: dc1 ga ⊆ dc1 g ∪ dc1 ga+
        DecreaseSet da = decreasing_set(t, Parameter::g_a, 1);
        DecreaseSet dg = decreasing_set(t, Parameter::g, 1);
        DecreaseSet dgap = decreasing_set(t, Parameter::g_a_plus, 1);
        for (const auto& op : da.operations) CHECK((dg.contains(op) || dgap.contains(op)));
        ++checked;
    }
}

TEST_CASE("Lemma 15: vertex deletions pin operations outside dc1") {
    std::mt19937 rng(777);
    int checked = 0;
    while (checked < 5) {
        SimpleGraph g = random_connected(rng, 6, 0.5);
        TerminalGraph t(g, 0, 1);
        if (t.has_xy_edge()) continue;
        for (Parameter p : {Parameter::g, Parameter::g_plus, Parameter::g_a_plus}) {
            ParameterProfile base = parameter_profile(t);
            DecreaseSet dc = decreasing_set(t, p, 1);
            for (int v = 2; v < g.n; ++v) {
                uint32_t all = (1u << g.n) - 1;
                TerminalGraph rest(g.induced(all & ~(1u << v)), 0, 1);
                if (parameter_value(parameter_profile(rest), p) !=
                    parameter_value(base, p))
                    continue;
                for (const auto& op : dc.operations) {
                    CHECK(op.edge.first != v);
                    CHECK(op.edge.second != v);
                }
            }
        }
        ++checked;
    }
}

TEST_CASE("parallel kernel matches the serial reference") {
    for (TerminalGraph g : {k33_nonadj(), k5_gap(), two_k5_dumbbell()}) {
        auto serial = minor_profiles_serial(g);
        auto parallel = minor_profiles_parallel(g);
        REQUIRE(serial.size() == parallel.size());
        for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
    }
    set_worker_count(1);
    CHECK(worker_count() == 1);
    CHECK(minor_profiles(k5_gap()) == minor_profiles_parallel(k5_gap()));
    set_worker_count(0);
}
