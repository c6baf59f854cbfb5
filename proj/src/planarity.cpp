#include "genusforge/planarity.hpp"

#include <algorithm>
#include <bit>

namespace genusforge {

namespace {

// Demoucron on a biconnected graph with n >= 3. Embedded subgraph H grows by
// one fragment path per round; faces are simple cycles (H stays 2-connected).
struct Demoucron {
    const SimpleGraph& g;
    std::vector<uint32_t> in_h_adj;  // adjacency restricted to embedded edges
    uint32_t in_h = 0;               // embedded vertices
    int h_edges = 0;
    std::vector<std::vector<int>> faces;

    explicit Demoucron(const SimpleGraph& g_) : g(g_), in_h_adj(g_.n, 0) {}

    void add_h_edge(int u, int v) {
        in_h_adj[u] |= 1u << v;
        in_h_adj[v] |= 1u << u;
        in_h |= (1u << u) | (1u << v);
        ++h_edges;
    }

    std::vector<int> find_cycle() const {
        // walk forward until a vertex repeats; the tail from its first visit
        std::vector<int> path;
        std::vector<int> pos(g.n, -1);
        int v = 0;
        while (g.degree(v) == 0) ++v;
        int prev = -1;
        for (;;) {
            if (pos[v] >= 0)
                return std::vector<int>(path.begin() + pos[v], path.end());
            pos[v] = static_cast<int>(path.size());
            path.push_back(v);
            uint32_t nb = g.adj[v] & ~(prev >= 0 ? 1u << prev : 0u);
            prev = v;
            v = std::countr_zero(nb);  // biconnected: min degree >= 2
        }
    }

    struct Fragment {
        uint32_t inner;        // vertices outside H (empty for a chord)
        uint32_t attachments;  // H-vertices touched
        Edge chord;            // valid when inner == 0
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
        uint32_t outside = all & ~in_h;
        // components of G - V(H)
        while (outside) {
            int s = std::countr_zero(outside);
            uint32_t comp = 1u << s, frontier = comp;
            while (frontier) {
                uint32_t next = 0;
                uint32_t f = frontier;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= g.adj[u] & ~in_h & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            outside &= ~comp;
            uint32_t att = 0;
            uint32_t c = comp;
            while (c) {
                int u = std::countr_zero(c);
                c &= c - 1;
                att |= g.adj[u] & in_h;
            }
            out.push_back({comp, att, {-1, -1}});
        }
        // chords: non-embedded edges with both ends in H
        for (auto [u, v] : g.edges) {
            if (((in_h >> u) & 1u) && ((in_h >> v) & 1u) && !((in_h_adj[u] >> v) & 1u))
                out.push_back({0, (1u << u) | (1u << v), {u, v}});
        }
        return out;
    }

    static uint32_t face_mask(const std::vector<int>& face) {
        uint32_t m = 0;
        for (int v : face) m |= 1u << v;
        return m;
    }

    // Path through the fragment between two distinct attachment vertices.
    std::vector<int> fragment_path(const Fragment& fr) const {
        if (fr.inner == 0) return {fr.chord.first, fr.chord.second};
        int a = std::countr_zero(fr.attachments);
        uint32_t rest_att = fr.attachments & (fr.attachments - 1);
        // BFS from a through inner vertices to any other attachment
        std::vector<int> parent(g.n, -1);
        std::vector<int> queue;
        uint32_t seen = 1u << a;
        queue.push_back(a);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            uint32_t nb = (u == a) ? (g.adj[u] & fr.inner) : g.adj[u];
            nb &= ~seen;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if ((fr.inner >> w) & 1u) {
                    parent[w] = u;
                    seen |= 1u << w;
                    queue.push_back(w);
                } else if (u != a && ((rest_att >> w) & 1u)) {
                    std::vector<int> path{w};
                    for (int t = u; t != -1; t = parent[t]) path.push_back(t);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
            }
        }
        throw graph_error("fragment path not found");  // impossible if biconnected
    }

    bool run() {
        std::vector<int> cyc = find_cycle();
        for (size_t i = 0; i < cyc.size(); ++i)
            add_h_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
        faces.push_back(cyc);
        std::reverse(cyc.begin(), cyc.end());
        faces.push_back(cyc);

        while (h_edges < g.edge_count()) {
            auto frs = fragments();
            // pick the fragment with fewest admissible faces
            int best = -1, best_count = 1 << 30, best_face = -1;
            for (size_t i = 0; i < frs.size(); ++i) {
                int count = 0, first = -1;
                for (size_t f = 0; f < faces.size(); ++f) {
                    if ((face_mask(faces[f]) & frs[i].attachments) == frs[i].attachments) {
                        ++count;
                        if (first < 0) first = static_cast<int>(f);
                    }
                }
                if (count < best_count) {
                    best_count = count;
                    best = static_cast<int>(i);
                    best_face = first;
                    if (count == 0) return false;
                }
            }
            const Fragment& fr = frs[best];
            std::vector<int> path = fragment_path(fr);
            for (size_t i = 0; i + 1 < path.size(); ++i) add_h_edge(path[i], path[i + 1]);
            // split the chosen face along the path
            std::vector<int> face = faces[best_face];
            int k = static_cast<int>(face.size());
            int pa = -1, pb = -1;
            for (int i = 0; i < k; ++i) {
                if (face[i] == path.front()) pa = i;
                if (face[i] == path.back()) pb = i;
            }
            std::vector<int> f1, f2;
            for (int i = pa; face[i % k] != face[pb % k] || i == pa; ++i)
                f1.push_back(face[i % k]);
            f1.push_back(face[pb]);
            for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
            for (int i = pb; face[i % k] != face[pa % k] || i == pb; ++i)
                f2.push_back(face[i % k]);
            f2.push_back(face[pa]);
            for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
            faces[best_face] = std::move(f1);
            faces.push_back(std::move(f2));
        }
        return true;
    }
};

bool block_planar(const SimpleGraph& b) {
    if (b.n <= 4) return true;
    if (b.edge_count() > 3 * b.n - 6) return false;
    return Demoucron(b).run();
}

}  // namespace

bool is_planar(const SimpleGraph& g) {
    for (const SimpleGraph& b : blocks(g))
        if (!block_planar(b)) return false;
    return true;
}

}  // namespace genusforge
