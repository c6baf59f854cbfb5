// Acceptance gate: one pass/fail line per criterion (1-9), nonzero exit on
// any failure. Each criterion is self-contained and timed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genusforge/catalog.hpp"
#include "genusforge/critical.hpp"
#include "genusforge/embed.hpp"
#include "genusforge/graph.hpp"
#include "genusforge/iso.hpp"
#include "genusforge/planarity.hpp"
#include "genusforge/torus.hpp"

using namespace genusforge;

#ifndef GF_DATA_DIR
#define GF_DATA_DIR "data"
#endif
#ifndef GF_CLI
#define GF_CLI ""
#endif

namespace {

struct Checker {
    std::string why;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

SimpleGraph random_connected(std::mt19937& rng, int n, double p) {
    for (;;) {
        SimpleGraph g(n);
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (g.is_connected() && g.edge_count() >= n) return g;
    }
}

TerminalGraph random_part(std::mt19937& rng, int n, double p) {
    SimpleGraph g = random_connected(rng, n, p);
    if (g.has_edge(0, 1)) g.remove_edge(0, 1);
    if (!g.is_connected()) return random_part(rng, n, p);
    return TerminalGraph(std::move(g), 0, 1);
}

// Chain of blocks glued at shared cut vertices.
SimpleGraph random_multi_block(std::mt19937& rng, int blocks, int block_n) {
    SimpleGraph g = random_connected(rng, block_n, 0.7);
    for (int b = 1; b < blocks; ++b) {
        SimpleGraph nb = random_connected(rng, block_n, 0.7);
        int cut = g.n - 1;  // last vertex of the previous block
        SimpleGraph merged(g.n + nb.n - 1, g.edges);
        for (auto [u, v] : nb.edges) {
            auto remap = [&](int w) { return w == 0 ? cut : g.n + w - 1; };
            merged.add_edge(std::min(remap(u), remap(v)), std::max(remap(u), remap(v)));
        }
        g = merged;
    }
    return g;
}

TerminalGraph random_dumbbell(std::mt19937& rng, int na, int nb) {
    SimpleGraph a = random_connected(rng, na, 0.6);
    SimpleGraph b = random_connected(rng, nb, 0.6);
    SimpleGraph g(na + nb, a.edges);
    for (auto [u, v] : b.edges) g.add_edge(na + u, na + v);
    g.add_edge(na - 1, na);  // the bar
    std::uniform_int_distribution<int> ax(0, na - 2), by(0, nb - 2);
    return TerminalGraph(std::move(g), ax(rng), na + by(rng));
}

using Criterion = std::function<void(Checker&)>;

const Catalog& shipped() {
    static Catalog c = load_catalog_file(std::string(GF_DATA_DIR) + "/torus-building-blocks.cat");
    return c;
}

const ValidationReport& shipped_report() {
    static ValidationReport r = validate_catalog(shipped());
    return r;
}

void criterion1(Checker& c) {  // Kuratowski baseline
    for (const SimpleGraph& k : builtin_kuratowski()) {
        c.require(min_genus(k) == 1, "Kuratowski genus != 1");
        c.require(is_obstruction(k, 0), "Kuratowski not an obstruction for the sphere");
        for (const MinorOperation& op : minor_operations(k)) {
            SimpleGraph m = op.kind == MinorKind::Delete ? delete_edge(k, op.edge)
                                                         : contract_edge(k, op.edge);
            c.require(is_planar(m), "a single-operation minor is nonplanar");
        }
    }
}

void criterion2(Checker& c) {  // base classes
    Catalog cg = build_c0_g();
    Catalog cgp = build_c0_gplus();
    c.require(cg.entries.size() == 1, "|C0(g)| != 1");
    c.require(cgp.entries.size() == 3, "|C0(g+)| != 3");
    int theta0 = 0;
    for (const auto& e : cgp.entries) theta0 += parameter_profile(e.graph).theta == 0;
    c.require(theta0 == 1, "theta=0 count in C0(g+) is not 1");
}

void criterion3(Checker& c) {  // Decker oracle equivalence
    std::mt19937 rng(20260823);
    for (int i = 0; i < 100 && c.ok; ++i) {
        TerminalGraph g1 = random_part(rng, 4 + i % 4, 0.55);
        TerminalGraph g2 = random_part(rng, 4 + (i / 2) % 4, 0.55);
        for (bool we : {false, true}) {
            TerminalGraph sum = xy_sum(g1, g2, SumOrientation::Straight, we);
            int direct = min_genus(sum.graph);
            int formula = two_sum_genus(g1, g2, we).genus;
            c.require(direct == formula, "two_sum_genus disagrees with direct search");
        }
    }
}

void criterion4(Checker& c) {  // Battle additivity
    std::mt19937 rng(404);
    for (int i = 0; i < 50 && c.ok; ++i) {
        SimpleGraph g = random_multi_block(rng, 2 + i % 3, 4 + i % 2);
        int whole = min_genus(g, /*decompose=*/false);
        int total = 0;
        for (const SimpleGraph& b : blocks(g)) total += min_genus(b, /*decompose=*/false);
        c.require(whole == total, "raw genus != sum of raw block genera");
    }
}

void criterion5(Checker& c) {  // parameter-lattice property suite
    std::mt19937 rng(505);
    auto dc = [](const std::vector<MinorOperation>& ops,
                 const std::vector<ParameterProfile>& ps, const ParameterProfile& base,
                 Parameter par, int k) {
        std::set<size_t> s;
        for (size_t i = 0; i < ops.size(); ++i)
            if (parameter_value(ps[i], par) <= parameter_value(base, par) - k) s.insert(i);
        return s;
    };
    auto subset = [](const std::set<size_t>& a, const std::set<size_t>& b) {
        for (size_t i : a)
            if (!b.count(i)) return false;
        return true;
    };
    for (int i = 0; i < 200 && c.ok; ++i) {
        TerminalGraph g = random_part(rng, 5 + i % 4, 0.5);
        ParameterProfile p = parameter_profile(g);
        p.validate();  // Lemmas 7, 8, 9
        std::vector<MinorOperation> ops = minor_operations(g);
        std::vector<ParameterProfile> ps = minor_profiles(g);
        for (size_t j = 0; j < ops.size(); ++j) {
            c.require(ps[j].g_a <= p.g_a, "Lemma 6: g_a increased under a minor");
            if (ops[j].kind == MinorKind::Delete)
                c.require(ps[j].g_a >= p.g_a - 1, "Lemma 16: deletion dropped g_a by > 1");
        }
        // 1-separated pairs (P, Q, L): S1-S3
        struct Sep {
            Parameter p, q;
            int l;
        };
        ParameterProfile pp = p;
        const Sep seps[] = {{Parameter::g, Parameter::g_plus, pp.theta},
                            {Parameter::g_a, Parameter::g, pp.epsilon},
                            {Parameter::g_a_plus, Parameter::g_plus, pp.epsilon_plus},
                            {Parameter::g_a, Parameter::g_a_plus,
                             pp.epsilon + pp.theta - pp.epsilon_plus}};
        for (const Sep& s : seps) {
            for (int k = 1; k <= 2; ++k) {
                auto dp = dc(ops, ps, p, s.p, k);
                auto dq = dc(ops, ps, p, s.q, k);
                if (s.l == 1) c.require(subset(dp, dq), "(S1) violated");
                if (s.l == 0) c.require(subset(dq, dp), "(S2) violated");
                auto dp1 = dc(ops, ps, p, s.p, k + 1);
                auto dq1 = dc(ops, ps, p, s.q, k + 1);
                c.require(subset(dp1, dq) && subset(dq1, dp), "(S3) violated");
            }
        }
        // Corollary 11: dc1 ga is contained in dc1 g union dc1 ga+
        auto da = dc(ops, ps, p, Parameter::g_a, 1);
        auto dg = dc(ops, ps, p, Parameter::g, 1);
        auto dap = dc(ops, ps, p, Parameter::g_a_plus, 1);
        for (size_t j : da)
            c.require(dg.count(j) || dap.count(j), "Corollary 11 inclusion violated");
    }
}

void criterion6(Checker& c) {  // dumbbell suite
    std::mt19937 rng(606);
    for (int i = 0; i < 30 && c.ok; ++i) {
        TerminalGraph g = random_dumbbell(rng, 3 + i % 3, 3 + (i / 3) % 3);
        std::vector<Edge> bs = bars(g);
        c.require(bs.size() >= 1, "constructed dumbbell has no bar");
        ParameterProfile p = parameter_profile(g);
        c.require(p.epsilon_plus == 0, "Lemma 13: dumbbell with eps+ != 0");
        MinorOperation barc{bs[0], MinorKind::Contract};
        ParameterProfile pm = parameter_profile(apply_op(g, barc));
        c.require(pm.g > p.g - 1 && pm.g_plus > p.g_plus - 1,
                  "Lemma 13: bar contraction dropped g or g+");
        if (dumbbell_class_D(g)) c.require(bs.size() == 1, "class-D member with several bars");
    }
    // a two-bar chain can never be in class D
    std::mt19937 rng2(607);
    TerminalGraph a = random_dumbbell(rng2, 3, 3);
    SimpleGraph chain(a.graph.n + 3, a.graph.edges);
    chain.add_edge(a.graph.n - 1, a.graph.n);
    chain.add_edge(a.graph.n, a.graph.n + 1);
    chain.add_edge(a.graph.n, a.graph.n + 2);
    chain.add_edge(a.graph.n + 1, a.graph.n + 2);
    TerminalGraph two_bars(chain, a.x, chain.n - 1);
    c.require(bars(two_bars).size() >= 2, "chain construction lacks two bars");
    c.require(!dumbbell_class_D(two_bars), "multi-bar dumbbell accepted into class D");
}

void criterion7(Checker& c) {  // catalog validation
    const ValidationReport& rep = shipped_report();
    c.require(rep.ok(), rep.issues.empty() ? "?" : rep.issues[0].entry + ": " + rep.issues[0].what);
    c.require(rep.t_count[4] == 5, "|T4| != 5");
    c.require(rep.connected_union == 27, "connected union != 27");
    c.require(rep.t_count[2] == 6, "|T2| != 6");
    c.require(generate_T2().entries.size() == 6, "generated T2 != 6");
}

void criterion8(Checker& c) {  // headline reproduction
    EnumerationResult res = enumerate_torus_c2(shipped(), shipped_report());
    c.require(res.counts.pairs == 81 && res.counts.filtered == 76 &&
                  res.counts.obstructions == 68,
              "counts != (81, 76, 68)");
    c.require(res.counts.t2_pairs == 18 && res.counts.t2_distinct == 10,
              "T2 collapse != 18 -> 10");
    EnumerationResult par = enumerate_torus_c2(shipped(), shipped_report(), true);
    c.require(par.counts.obstructions == 68, "paranoid all-gluings count != 68");
    VerificationReport f = verify_all(res.records, shipped(), VerifyMode::Formula);
    c.require(f.ok(), f.ok() ? "?" : f.issues[0].record + ": " + f.issues[0].what);
    VerificationReport s = verify_all(res.records, shipped(), VerifyMode::Search, 10);
    c.require(s.ok() && s.search_checked == 10,
              s.ok() ? "search count wrong" : s.issues[0].record + ": " + s.issues[0].what);
}

void criterion9(Checker& c) {  // fault injection
    // catalog corruption, through the CLI for a real exit code
    Catalog broken = shipped();
    SimpleGraph g = broken.entries[0].graph.graph;
    Edge gone = g.edges[0];
    g.remove_edge(gone.first, gone.second);
    broken.entries[0].graph = TerminalGraph(g, broken.entries[0].graph.x,
                                            broken.entries[0].graph.y);
    ValidationReport rep = validate_catalog(broken);
    c.require(!rep.ok(), "corrupted catalog entry not detected");
    bool named = false;
    for (const auto& i : rep.issues) named |= i.entry == broken.entries[0].name;
    c.require(named, "corruption discrepancy does not name the entry");

    const std::string cli = GF_CLI;
    if (!cli.empty()) {
        std::string tmp = "/tmp/genusforge-acceptance-broken.cat";
        std::ofstream out(tmp);
        out << write_catalog(broken);
        out.close();
        int rc = std::system((cli + " validate-catalog " + tmp + " > /dev/null").c_str());
        c.require(rc != 0, "CLI exit code is zero on a corrupted catalog");
        std::remove(tmp.c_str());
    }

    // record corruption
    EnumerationResult res = enumerate_torus_c2(shipped(), shipped_report());
    std::vector<ObstructionRecord> one{res.records[0]};
    SimpleGraph rg = one[0].graph;
    Edge re = rg.edges[0];
    rg.remove_edge(re.first, re.second);
    one[0].graph = rg;
    VerificationReport vr = verify_all(one, shipped(), VerifyMode::Formula);
    c.require(!vr.ok(), "corrupted record not detected");
    bool rnamed = false;
    for (const auto& i : vr.issues)
        rnamed |= i.record.find(one[0].part1_name) != std::string::npos;
    c.require(rnamed, "record discrepancy does not name the pair");
}

}  // namespace

int main() {
    const std::pair<const char*, Criterion> criteria[] = {
        {"Kuratowski baseline", criterion1},
        {"base classes C0(g), C0(g+)", criterion2},
        {"Decker 2-sum oracle equivalence", criterion3},
        {"Battle additivity over blocks", criterion4},
        {"parameter-lattice property suite", criterion5},
        {"dumbbell suite", criterion6},
        {"catalog validation", criterion7},
        {"headline 81/76/68 reproduction", criterion8},
        {"fault injection", criterion9},
    };
    int failures = 0;
    for (size_t i = 0; i < std::size(criteria); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Checker c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s (%.1fs) %s%s%s\n", i + 1, c.ok ? "PASS" : "FAIL", secs,
                    criteria[i].first, c.ok ? "" : " -- ", c.ok ? "" : c.why.c_str());
        std::fflush(stdout);
        failures += !c.ok;
    }
    return failures ? 1 : 0;
}
