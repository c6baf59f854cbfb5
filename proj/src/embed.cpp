#include "genusforge/embed.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>

#include "genusforge/iso.hpp"
#include "genusforge/planarity.hpp"

namespace genusforge {

// --- face tracing on explicit rotation systems --------------------------------

std::vector<FaceWalk> trace_faces(const RotationSystem& r) {
    const SimpleGraph& g = r.graph;
    if (!g.is_connected() || g.n == 0)
        throw graph_error("trace requires connected graph");
    if (g.edge_count() == 0) throw graph_error("trace requires at least one edge");
    int D = 2 * g.edge_count();
    std::vector<int> pnext(D, -1);
    if (static_cast<int>(r.rot.size()) != g.n) throw graph_error("bad rotation system");
    std::vector<int> seen_at(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        const auto& cyc = r.rot[v];
        if (static_cast<int>(cyc.size()) != g.degree(v))
            throw graph_error("bad rotation system");
        for (size_t i = 0; i < cyc.size(); ++i) {
            int d = cyc[i];
            if (d < 0 || d >= D || r.dart_tail(d) != v || pnext[d] != -1)
                throw graph_error("bad rotation system");
            pnext[d] = cyc[(i + 1) % cyc.size()];
        }
        (void)seen_at;
    }
    // face successor: phi(d) = pi_{head(d)}(rev(d))
    std::vector<FaceWalk> faces;
    std::vector<char> used(D, 0);
    for (int d0 = 0; d0 < D; ++d0) {
        if (used[d0]) continue;
        FaceWalk w;
        int d = d0;
        do {
            used[d] = 1;
            w.darts.push_back(d);
            d = pnext[d ^ 1];
        } while (d != d0);
        faces.push_back(std::move(w));
    }
    return faces;
}

int embedding_genus(const RotationSystem& r) {
    int f = static_cast<int>(trace_faces(r).size());
    int val = 2 - r.graph.n + r.graph.edge_count() - f;
    if (val < 0 || val % 2 != 0) throw graph_error("Euler parity violation");
    return val / 2;
}

// --- the branch-and-bound engine -----------------------------------------------
//
// Builds the face permutation phi one dart at a time. Assigning phi(d) = b is
// the rotation assignment pi_v(rev(d)) = b at v = head(d); rotation
// consistency is kept by chain bookkeeping that forbids closing a vertex
// cycle before it covers all darts at the vertex. Faces are built in
// canonical order (each face starts at the smallest dart not yet used), so
// every rotation system compatible with the pins is generated exactly once.

namespace {

struct Engine {
    int n, m, D;
    std::vector<int> tail_, head_;
    std::vector<std::vector<int>> darts_at;
    std::vector<int> deg;
    std::vector<int> pnext, pprev;  // rotation successor/predecessor, -1 unset
    std::vector<int> cs, ce;        // chain start (valid at ends) / end (at starts)
    std::vector<int> assigned_at;
    std::vector<char> in_face;
    int visited = 0, faces_closed = 0;
    int cap = 0, best = 0;
    bool decision = false, stop = false;
    int parity;  // required parity of the face count

    // mirror symmetry: either a pinned degree-3 rotation or an orientation
    // check when the cycle at chk_vertex closes
    int chk_vertex = -1, chk_a = -1, chk_b = -1, chk_c = -1;

    // epsilon mode: first face must be xy-alternating
    bool eps_mode = false;
    int ex = -1, ey = -1;
    bool first_closed = false;
    std::vector<int> face_seq;

    bool capture = false;
    std::vector<int> best_pnext;
    long long nodes = 0;

    explicit Engine(const SimpleGraph& g)
        : n(g.n), m(g.edge_count()), D(2 * g.edge_count()) {
        tail_.resize(D);
        head_.resize(D);
        darts_at.resize(n);
        deg.resize(n);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges[i];
            tail_[2 * i] = u;
            head_[2 * i] = v;
            tail_[2 * i + 1] = v;
            head_[2 * i + 1] = u;
        }
        for (int d = 0; d < D; ++d) darts_at[tail_[d]].push_back(d);
        for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(darts_at[v].size());
        pnext.assign(D, -1);
        pprev.assign(D, -1);
        cs.resize(D);
        ce.resize(D);
        for (int d = 0; d < D; ++d) cs[d] = ce[d] = d;
        assigned_at.assign(n, 0);
        in_face.assign(D, 0);
        parity = ((2 - n + m) % 2 + 2) % 2;
    }

    // Halve the mirror symmetry: pin the full rotation of a degree-3 vertex
    // (its two cyclic orders are mirror images), or record an orientation
    // check at a max-degree vertex.
    void setup_mirror() {
        int pin = -1, maxv = -1;
        for (int v = 0; v < n; ++v) {
            if (deg[v] == 3 && pin < 0) pin = v;
            if (maxv < 0 || deg[v] > deg[maxv]) maxv = v;
        }
        if (pin >= 0) {
            const auto& d = darts_at[pin];
            pnext[d[0]] = d[1];
            pnext[d[1]] = d[2];
            pnext[d[2]] = d[0];
            pprev[d[1]] = d[0];
            pprev[d[2]] = d[1];
            pprev[d[0]] = d[2];
            assigned_at[pin] = 3;
        } else if (deg[maxv] >= 4) {
            chk_vertex = maxv;
            chk_a = darts_at[maxv][0];
            chk_b = darts_at[maxv][1];
            chk_c = darts_at[maxv][2];
        }
    }

    bool mirror_ok() const {
        int d = pnext[chk_a];
        while (d != chk_a) {
            if (d == chk_b) return true;
            if (d == chk_c) return false;
            d = pnext[d];
        }
        return true;
    }

    bool first_face_alternating() const {
        int count = 0;
        int prev = -1, first = -1, blocksn = 0;
        for (int d : face_seq) {
            int t = tail_[d];
            int sym = t == ex ? 0 : t == ey ? 1 : -1;
            if (sym < 0) continue;
            ++count;
            if (first < 0) first = sym;
            else if (sym != prev) ++blocksn;
            prev = sym;
        }
        if (count < 4) return false;
        if (first != prev) ++blocksn;  // cyclic wrap transition
        // blocksn counts transitions; cyclically #blocks == #transitions
        return blocksn >= 4;
    }

    void leaf() {
        int g = (2 - n + m - faces_closed) / 2;
        if (eps_mode) {
            // prune guarantees g <= cap here, and the first face alternated
            stop = true;
            if (capture) best_pnext = pnext;
            best = g;
            return;
        }
        if (g < best) {
            best = g;
            if (capture) best_pnext = pnext;
            if (decision && best <= cap) stop = true;
        }
    }

    void step(int fs, int fc) {
        if (stop) return;
        ++nodes;
        int R = D - visited;
        bool open = fs >= 0;
        int fmax = faces_closed + (open ? 1 + (R - 1) / 3 : R / 3);
        if ((fmax & 1) != parity) --fmax;
        int limit = std::min(cap, best - 1);
        if (2 - n + m - fmax > 2 * limit) return;
        if (!open) {
            if (visited == D) {
                leaf();
                return;
            }
            int s = 0;
            while (in_face[s]) ++s;
            step(s, s);
            return;
        }
        int v = head_[fc];
        int a = fc ^ 1;
        if (pnext[a] != -1) {
            advance(fs, fc, a, pnext[a]);
            return;
        }
        // try closing the face first: short faces keep the bound high
        for (int pass = 0; pass < 2; ++pass) {
        for (int b : darts_at[v]) {
            if ((b == fs) != (pass == 0)) continue;
            if (pprev[b] != -1) continue;
            bool cyc = cs[a] == b;
            if (cyc && assigned_at[v] + 1 != deg[v]) continue;
            pnext[a] = b;
            pprev[b] = a;
            ++assigned_at[v];
            int S = -1, E = -1;
            if (!cyc) {
                S = cs[a];
                E = ce[b];
                ce[S] = E;
                cs[E] = S;
            }
            if (!(cyc && v == chk_vertex) || mirror_ok()) advance(fs, fc, a, b);
            if (!cyc) {
                ce[S] = a;
                cs[E] = b;
            }
            pnext[a] = -1;
            pprev[b] = -1;
            --assigned_at[v];
            if (stop) return;
        }
        }
    }

    // Appends b to the open face (fs..fc); closes the face when b == fs.
    void advance(int fs, int fc, int /*a*/, int b) {
        if (in_face[b]) return;  // forced successor already consumed elsewhere
        bool track = eps_mode && !first_closed;
        in_face[b] = 1;
        ++visited;
        if (b == fs) {
            ++faces_closed;
            if (!track || first_face_alternating()) {
                if (track) {
                    first_closed = true;
                    step(-1, -1);
                    first_closed = false;
                } else {
                    step(-1, -1);
                }
            }
            --faces_closed;
        } else {
            if (track) {
                face_seq.push_back(b);
                step(fs, b);
                face_seq.pop_back();
            } else {
                step(fs, b);
            }
        }
        in_face[b] = 0;
        --visited;
    }

    // Exact genus search; returns min(genus, cap_v + 1).
    int run(int cap_v, bool decision_v) {
        cap = cap_v;
        best = cap_v + 1;
        decision = decision_v;
        setup_mirror();
        step(-1, -1);
        return best;
    }

    // Epsilon search: true iff some embedding of genus <= g0 (== g0 since g0
    // is the minimum) has an alternating face through start dart d0.
    bool run_eps(int g0, int d0) {
        cap = g0;
        best = g0 + 1;
        eps_mode = true;
        face_seq.assign(1, d0);
        step(d0, d0);
        face_seq.clear();
        return stop;
    }

    RotationSystem rotation_from(const SimpleGraph& g, const std::vector<int>& pn) const {
        RotationSystem r;
        r.graph = g;
        r.rot.resize(n);
        for (int v = 0; v < n; ++v) {
            if (deg[v] == 0) continue;
            int d = darts_at[v][0];
            do {
                r.rot[v].push_back(d);
                d = pn[d];
            } while (d != darts_at[v][0]);
        }
        return r;
    }
};

// Relabels vertices by decreasing degree (better pruning) and returns the
// new graph plus old->new map.
SimpleGraph relabel_by_degree(const SimpleGraph& g, std::vector<int>& old_to_new) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    old_to_new.assign(g.n, -1);
    for (int i = 0; i < g.n; ++i) old_to_new[order[i]] = i;
    SimpleGraph out(g.n);
    for (auto [u, v] : g.edges) out.add_edge(old_to_new[u], old_to_new[v]);
    return out;
}

// Suppresses degree-2 vertices (homeomorphism; parallel edges that appear
// are dropped, which preserves orientable genus) and strips isolated and
// pendant vertices. Only used on plain-genus inputs.
SimpleGraph reduce_homeomorphic(SimpleGraph g) {
    for (;;) {
        int pick = -1;
        bool pendant = false;
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) <= 1 && g.n > 1) {
                pick = v;
                pendant = true;
                break;
            }
            if (g.degree(v) == 2) pick = v;
        }
        if (pick < 0) return g;
        uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
        if (pendant) {
            g = g.induced(all & ~(1u << pick));
            continue;
        }
        uint32_t nb = g.adj[pick];
        int a = std::countr_zero(nb);
        int b = std::countr_zero(nb & (nb - 1));
        SimpleGraph h = g.induced(all & ~(1u << pick));
        auto shift = [&](int w) { return w > pick ? w - 1 : w; };
        h.add_edge(shift(a), shift(b));
        g = std::move(h);
    }
}

// Iterative deepening: a decision search at each k has a tight face bound
// from the very first branch, unlike one exact search whose bound only
// tightens after a first (bad) leaf.
int raw_connected_genus(const SimpleGraph& g, int cap, bool /*decision*/) {
    if (g.edge_count() == 0) return 0;
    if (is_planar(g)) return 0;
    if (cap < 1) return cap + 1;
    std::vector<int> o2n;
    SimpleGraph h = relabel_by_degree(g, o2n);
    int upper = (h.edge_count() - h.n + 1) / 2 + 1;  // any embedding has f >= 1
    for (int k = 1; k <= std::min(cap, upper); ++k) {
        Engine e(h);
        int got = e.run(k, true);
        if (got <= k) return got;
    }
    return cap + 1;
}

// --- memoized block genus ------------------------------------------------------

std::map<std::string, int>& genus_memo() {
    static std::map<std::string, int> memo;
    return memo;
}
std::mutex& genus_memo_mutex() {
    static std::mutex mu;
    return mu;
}

int block_genus(const SimpleGraph& block) {
    if (block.n <= 4 || is_planar(block)) return 0;
    SimpleGraph r = reduce_homeomorphic(block);
    std::string key = canonical_code(r);
    {
        std::lock_guard<std::mutex> lock(genus_memo_mutex());
        auto it = genus_memo().find(key);
        if (it != genus_memo().end()) return it->second;
    }
    int g = raw_connected_genus(r, r.edge_count(), false);
    std::lock_guard<std::mutex> lock(genus_memo_mutex());
    genus_memo()[key] = g;
    return g;
}

}  // namespace

int min_genus(const SimpleGraph& g, bool decompose) {
    int total = 0;
    if (decompose) {
        for (const SimpleGraph& b : blocks(g)) total += block_genus(b);
    } else {
        for (uint32_t comp : g.components())
            total += raw_connected_genus(g.induced(comp), g.edge_count(), false);
    }
    return total;
}

int min_genus(const SimpleGraph& g) { return min_genus(g, true); }

bool embeds_in(const SimpleGraph& g, int k) {
    if (k < 0) return false;
    std::vector<SimpleGraph> hard;
    for (const SimpleGraph& b : blocks(g))
        if (b.n > 4 && !is_planar(b)) hard.push_back(b);
    int total = 0;
    for (size_t i = 0; i < hard.size(); ++i) {
        int slack = k - total - static_cast<int>(hard.size() - 1 - i);  // others need >= 1
        if (slack < 1) return false;
        if (i + 1 == hard.size()) {
            // last block: decision search with early exit
            SimpleGraph r = reduce_homeomorphic(hard[i]);
            std::string key = canonical_code(r);
            {
                std::lock_guard<std::mutex> lock(genus_memo_mutex());
                auto it = genus_memo().find(key);
                if (it != genus_memo().end()) return total + it->second <= k;
            }
            return raw_connected_genus(r, slack, true) <= slack;
        }
        total += block_genus(hard[i]);
        if (total > k) return false;
    }
    return total <= k;
}

std::pair<int, RotationSystem> min_genus_with_witness(const SimpleGraph& g) {
    if (g.edge_count() == 0) {
        RotationSystem r;
        r.graph = g;
        r.rot.resize(g.n);
        return {0, r};
    }
    // raw search per component, captured rotations merged into whole-graph darts
    RotationSystem result;
    result.graph = g;
    result.rot.resize(g.n);
    std::map<Edge, int> edge_index;
    for (int i = 0; i < g.edge_count(); ++i) edge_index[g.edges[i]] = i;
    int total = 0;
    for (uint32_t comp : g.components()) {
        SimpleGraph c = g.induced(comp);
        if (c.edge_count() == 0) continue;
        std::vector<int> new_to_old;
        for (int v = 0; v < g.n; ++v)
            if ((comp >> v) & 1u) new_to_old.push_back(v);
        Engine e(c);
        e.capture = true;
        int gc = e.run(c.edge_count(), false);
        total += gc;
        RotationSystem rc = e.rotation_from(c, e.best_pnext);
        for (int v = 0; v < c.n; ++v) {
            for (int d : rc.rot[v]) {
                auto [a, b] = c.edges[d >> 1];
                Edge oe{new_to_old[a], new_to_old[b]};
                result.rot[new_to_old[v]].push_back(2 * edge_index[oe] + (d & 1));
            }
        }
    }
    return {total, result};
}

// --- epsilon -------------------------------------------------------------------

namespace {

struct EpsResult {
    int value;
    std::optional<AlternatingCertificate> cert;
};

EpsResult epsilon_impl(const TerminalGraph& g, bool want_cert) {
    uint32_t comp = g.graph.component_of(g.x);
    if (!((comp >> g.y) & 1u)) return {0, std::nullopt};
    SimpleGraph c = g.graph.induced(comp);
    std::vector<int> new_id(g.graph.n, -1);
    int k = 0;
    for (int v = 0; v < g.graph.n; ++v)
        if ((comp >> v) & 1u) new_id[v] = k++;
    int cx = new_id[g.x], cy = new_id[g.y];
    if (c.edge_count() == 0) return {0, std::nullopt};
    int g0 = min_genus(c);
    for (int d = 0; d < 2 * c.edge_count(); ++d) {
        int t = (d & 1) ? c.edges[d >> 1].second : c.edges[d >> 1].first;
        if (t != cx) continue;
        Engine e(c);
        e.ex = cx;
        e.ey = cy;
        e.capture = want_cert;
        e.setup_mirror();
        if (e.run_eps(g0, d)) {
            if (!want_cert) return {1, std::nullopt};
            AlternatingCertificate cert;
            cert.rotation = e.rotation_from(c, e.best_pnext);
            cert.x = cx;
            cert.y = cy;
            // the witness face is the orbit of d under phi
            int cur = d;
            do {
                cert.face.darts.push_back(cur);
                cur = e.best_pnext[cur ^ 1];
            } while (cur != d);
            return {1, std::move(cert)};
        }
    }
    return {0, std::nullopt};
}

}  // namespace

int epsilon(const TerminalGraph& g) { return epsilon_impl(g, false).value; }

std::optional<AlternatingCertificate> alternating_face_certificate(const TerminalGraph& g) {
    return epsilon_impl(g, true).cert;
}

// --- profiles ------------------------------------------------------------------

void ParameterProfile::validate() const {
    auto fail = [](const char* what) { throw graph_error(std::string("profile invariant violated: ") + what); };
    if (g < 0 || g_plus < 0 || g_a < 0 || g_a_plus < 0) fail("negative parameter");
    if (theta != g_plus - g) fail("theta = g+ - g");
    if (theta != 0 && theta != 1) fail("theta in {0,1}");
    if (epsilon != 0 && epsilon != 1) fail("eps in {0,1}");
    if (epsilon_plus != 0 && epsilon_plus != 1) fail("eps+ in {0,1}");
    if (g_a != g - epsilon) fail("ga = g - eps");
    if (g_a_plus != g_plus - epsilon_plus) fail("ga+ = g+ - eps+");
    if ((epsilon == 1) != (theta == 0 && epsilon_plus == 1)) fail("Lemma 7");
    if (!(g_a == g || g_a == g_a_plus)) fail("Lemma 8");
    if (g_plus > g_a + 1) fail("Lemma 9");
}

namespace {

struct ProfileCache {
    std::map<std::string, ParameterProfile> memo;
    std::optional<std::string> path;
    std::vector<std::pair<std::string, ParameterProfile>> pending;
    std::mutex mu;
};

ProfileCache& profile_cache() {
    static ProfileCache c;
    return c;
}

std::optional<std::string> hex_to_code(const std::string& hex) {
    if (hex.size() % 2) return std::nullopt;
    std::string out;
    for (size_t i = 0; i < hex.size(); i += 2) {
        auto val = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            return -1;
        };
        int hi = val(hex[i]), lo = val(hex[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<char>(hi << 4 | lo));
    }
    return out;
}

}  // namespace

void set_profile_cache_path(const std::optional<std::string>& path) {
    ProfileCache& c = profile_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.path = path;
    c.pending.clear();
    if (!path) return;
    std::ifstream in(*path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string hex;
        ParameterProfile p;
        if (!(ls >> hex >> p.g >> p.g_plus >> p.theta >> p.epsilon >> p.epsilon_plus)) {
            std::cerr << "warning: ignoring corrupt cache line " << lineno << "\n";
            continue;
        }
        auto code = hex_to_code(hex);
        if (!code) {
            std::cerr << "warning: ignoring corrupt cache line " << lineno << "\n";
            continue;
        }
        p.g_a = p.g - p.epsilon;
        p.g_a_plus = p.g_plus - p.epsilon_plus;
        try {
            p.validate();
        } catch (const graph_error&) {
            std::cerr << "warning: ignoring corrupt cache line " << lineno << "\n";
            continue;
        }
        c.memo[*code] = p;
    }
}

void flush_profile_cache() {
    ProfileCache& c = profile_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (!c.path || c.pending.empty()) return;
    std::ofstream out(*c.path, std::ios::app);
    for (auto& [code, p] : c.pending)
        out << code_hex(code) << ' ' << p.g << ' ' << p.g_plus << ' ' << p.theta << ' '
            << p.epsilon << ' ' << p.epsilon_plus << '\n';
    c.pending.clear();
}

void clear_memo() {
    ProfileCache& c = profile_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.memo.clear();
    c.pending.clear();
    std::lock_guard<std::mutex> lock2(genus_memo_mutex());
    genus_memo().clear();
}

ParameterProfile parameter_profile(const TerminalGraph& g) {
    std::string key = canonical_code(g);
    ProfileCache& c = profile_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.memo.find(key);
        if (it != c.memo.end()) return it->second;
    }
    ParameterProfile p;
    TerminalGraph gp = with_xy_edge(g);
    p.g = min_genus(g.graph);
    p.g_plus = min_genus(gp.graph);
    p.theta = p.g_plus - p.g;
    p.epsilon = epsilon(g);
    p.epsilon_plus = epsilon(gp);
    p.g_a = p.g - p.epsilon;
    p.g_a_plus = p.g_plus - p.epsilon_plus;
    p.validate();
    std::lock_guard<std::mutex> lock(c.mu);
    c.memo.emplace(key, p);
    if (c.path) c.pending.emplace_back(key, p);
    return p;
}

int eta(const ParameterProfile& p1, const ParameterProfile& p2) {
    return p1.theta + p2.theta - p1.epsilon_plus * p2.epsilon_plus;
}

TwoSumResult two_sum_genus(const ParameterProfile& p1, const ParameterProfile& p2,
                           bool with_edge) {
    int h0 = p1.g + p2.g + 1;
    int h1 = p1.g_plus + p2.g_plus - p1.epsilon_plus * p2.epsilon_plus;
    TwoSumResult r;
    r.genus = with_edge ? h1 : std::min(h0, h1);
    r.epsilon_plus = p1.epsilon_plus != p2.epsilon_plus ? 1 : 0;
    r.theta = (!with_edge && eta(p1, p2) == 2) ? 1 : 0;
    return r;
}

TwoSumResult two_sum_genus(const TerminalGraph& g1, const TerminalGraph& g2, bool with_edge) {
    if (g1.has_xy_edge() || g2.has_xy_edge()) throw graph_error("parts must avoid xy");
    if (!g1.graph.is_connected() || !g2.graph.is_connected())
        throw graph_error("two_sum_genus requires connected parts");
    return two_sum_genus(parameter_profile(g1), parameter_profile(g2), with_edge);
}

}  // namespace genusforge
