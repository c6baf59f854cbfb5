#include "genusforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace genusforge {

SimpleGraph::SimpleGraph(int vertex_count) : n(vertex_count), adj(vertex_count, 0) {
    if (vertex_count < 0 || vertex_count > 32)
        throw graph_error("vertex count out of range (0..32)");
}

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edge_list)
    : SimpleGraph(vertex_count) {
    for (auto& [u, v] : edge_list) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw graph_error("edge endpoint out of range");
        if (u == v) throw graph_error("loops are not allowed");
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges = std::move(edge_list);
    rebuild_adj();
}

void SimpleGraph::rebuild_adj() {
    adj.assign(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
}

int SimpleGraph::degree(int v) const { return std::popcount(adj[v]); }

void SimpleGraph::add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) throw graph_error("bad edge");
    if (has_edge(u, v)) return;
    edges.insert(std::lower_bound(edges.begin(), edges.end(), Edge{u, v}), Edge{u, v});
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
}

void SimpleGraph::remove_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end() || *it != Edge{u, v}) throw graph_error("no such edge");
    edges.erase(it);
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
}

uint32_t SimpleGraph::component_of(int v) const {
    uint32_t seen = 1u << v;
    uint32_t frontier = seen;
    while (frontier) {
        uint32_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[u] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<uint32_t> SimpleGraph::components() const {
    std::vector<uint32_t> out;
    uint32_t left = n == 32 ? ~0u : (1u << n) - 1;
    while (left) {
        uint32_t c = component_of(std::countr_zero(left));
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool SimpleGraph::is_connected() const {
    if (n == 0) return true;
    return component_of(0) == (n == 32 ? ~0u : (1u << n) - 1);
}

SimpleGraph SimpleGraph::induced(uint32_t mask) const {
    std::vector<int> map(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) map[v] = k++;
    SimpleGraph out(k);
    for (auto [u, v] : edges)
        if (map[u] >= 0 && map[v] >= 0) out.add_edge(map[u], map[v]);
    return out;
}

SimpleGraph SimpleGraph::complete(int k) {
    SimpleGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

TerminalGraph::TerminalGraph(SimpleGraph g, int x_, int y_) : graph(std::move(g)), x(x_), y(y_) {
    if (x < 0 || y < 0 || x >= graph.n || y >= graph.n) throw graph_error("terminal out of range");
    if (x == y) throw graph_error("terminals must be distinct");
}

// --- minor-operations --------------------------------------------------------

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
    SimpleGraph out = g;
    out.remove_edge(e.first, e.second);
    return out;
}

TerminalGraph delete_edge(const TerminalGraph& g, Edge e) {
    return TerminalGraph(delete_edge(g.graph, e), g.x, g.y);
}

namespace {

// Contracts e = (u,v): v is merged into u, ids above v shift down by one.
SimpleGraph contract_impl(const SimpleGraph& g, Edge e) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (!g.has_edge(u, v)) throw graph_error("no such edge");
    SimpleGraph out(g.n - 1);
    auto remap = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
    for (auto [a, b] : g.edges) {
        int ra = remap(a), rb = remap(b);
        if (ra != rb) out.add_edge(ra, rb);
    }
    return out;
}

}  // namespace

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) { return contract_impl(g, e); }

TerminalGraph contract_edge(const TerminalGraph& g, Edge e) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    bool both = (u == g.x && v == g.y) || (u == g.y && v == g.x);
    if (both) throw graph_error("contraction of xy forbidden");
    SimpleGraph out = contract_impl(g.graph, {u, v});
    auto remap = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
    return TerminalGraph(std::move(out), remap(g.x), remap(g.y));
}

TerminalGraph apply_op(const TerminalGraph& g, const MinorOperation& op) {
    return op.kind == MinorKind::Delete ? delete_edge(g, op.edge) : contract_edge(g, op.edge);
}

SimpleGraph identify_terminals(const TerminalGraph& g) {
    int u = std::min(g.x, g.y), v = std::max(g.x, g.y);
    SimpleGraph out(g.graph.n - 1);
    auto remap = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
    for (auto [a, b] : g.graph.edges) {
        int ra = remap(a), rb = remap(b);
        if (ra != rb) out.add_edge(ra, rb);
    }
    return out;
}

TerminalGraph with_xy_edge(const TerminalGraph& g) {
    TerminalGraph out = g;
    out.graph.add_edge(g.x, g.y);
    return out;
}

std::vector<MinorOperation> minor_operations(const TerminalGraph& g) {
    std::vector<MinorOperation> out;
    out.reserve(2 * g.graph.edges.size());
    int a = std::min(g.x, g.y), b = std::max(g.x, g.y);
    for (auto e : g.graph.edges) {
        out.push_back({e, MinorKind::Delete});
        if (e != Edge{a, b}) out.push_back({e, MinorKind::Contract});
    }
    return out;
}

std::vector<MinorOperation> minor_operations(const SimpleGraph& g) {
    std::vector<MinorOperation> out;
    out.reserve(2 * g.edges.size());
    for (auto e : g.edges) {
        out.push_back({e, MinorKind::Delete});
        out.push_back({e, MinorKind::Contract});
    }
    return out;
}

TerminalGraph xy_sum(const TerminalGraph& g1, const TerminalGraph& g2,
                     SumOrientation orientation, bool with_edge) {
    if (g1.has_xy_edge() || g2.has_xy_edge()) throw graph_error("parts must avoid xy");
    int n1 = g1.graph.n, n2 = g2.graph.n;
    SimpleGraph out(n1 + n2 - 2);
    // Result layout: x = 0, y = 1, then non-terminals of g1, then of g2.
    std::vector<int> map1(n1), map2(n2);
    int k = 2;
    for (int v = 0; v < n1; ++v) map1[v] = v == g1.x ? 0 : v == g1.y ? 1 : k++;
    int x2 = orientation == SumOrientation::Straight ? g2.x : g2.y;
    int y2 = orientation == SumOrientation::Straight ? g2.y : g2.x;
    for (int v = 0; v < n2; ++v) map2[v] = v == x2 ? 0 : v == y2 ? 1 : k++;
    for (auto [u, v] : g1.graph.edges) out.add_edge(map1[u], map1[v]);
    for (auto [u, v] : g2.graph.edges) out.add_edge(map2[u], map2[v]);
    if (with_edge) out.add_edge(0, 1);
    return TerminalGraph(std::move(out), 0, 1);
}

// --- blocks / bars -----------------------------------------------------------

namespace {

struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> num, low;
    int counter = 0;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> block_edges;

    explicit BlockFinder(const SimpleGraph& g_) : g(g_), num(g_.n, -1), low(g_.n, 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        uint32_t nb = g.adj[v];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == parent) { parent = -1; continue; }  // skip one parent edge
            if (num[w] < 0) {
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    // v is a cut vertex (or root): pop one block
                    std::vector<Edge> blk;
                    while (!stack.empty()) {
                        Edge e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == Edge{v, w}) break;
                    }
                    block_edges.push_back(std::move(blk));
                }
            } else if (num[w] < num[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

}  // namespace

std::vector<SimpleGraph> blocks(const SimpleGraph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.n; ++v)
        if (bf.num[v] < 0) bf.dfs(v, -1);
    std::vector<SimpleGraph> out;
    for (auto& blk : bf.block_edges) {
        uint32_t mask = 0;
        for (auto [u, v] : blk) mask |= (1u << u) | (1u << v);
        std::vector<int> map(g.n, -1);
        int k = 0;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1u) map[v] = k++;
        SimpleGraph b(k);
        for (auto [u, v] : blk) b.add_edge(map[u], map[v]);
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<Edge> bars(const TerminalGraph& g) {
    std::vector<Edge> out;
    for (auto e : g.graph.edges) {
        SimpleGraph h = delete_edge(g.graph, e);
        if (!((h.component_of(g.x) >> g.y) & 1u)) out.push_back(e);
    }
    return out;
}

// --- XY-labelled conversion --------------------------------------------------

TerminalGraph from_xy_labelled(const XYLabelledGraph& h) {
    int k = h.graph.n;
    uint32_t all = k == 0 ? 0 : (k == 32 ? ~0u : (1u << k) - 1);
    if ((h.x_labels | h.y_labels) & ~all) throw graph_error("label out of range");
    SimpleGraph out(k + 2);
    // x = k, y = k+1
    for (auto [u, v] : h.graph.edges) out.add_edge(u, v);
    for (int v = 0; v < k; ++v) {
        if ((h.x_labels >> v) & 1u) out.add_edge(v, k);
        if ((h.y_labels >> v) & 1u) out.add_edge(v, k + 1);
    }
    return TerminalGraph(std::move(out), k, k + 1);
}

XYLabelledGraph to_xy_labelled(const TerminalGraph& g) {
    if (g.has_xy_edge()) throw graph_error("xy edge present");
    XYLabelledGraph out;
    std::vector<int> map(g.graph.n, -1);
    int k = 0;
    for (int v = 0; v < g.graph.n; ++v)
        if (!g.is_terminal(v)) map[v] = k++;
    out.graph = SimpleGraph(k);
    for (auto [u, v] : g.graph.edges) {
        if (g.is_terminal(u) || g.is_terminal(v)) continue;
        out.graph.add_edge(map[u], map[v]);
    }
    for (int v = 0; v < g.graph.n; ++v) {
        if (g.is_terminal(v)) continue;
        if (g.graph.has_edge(v, g.x)) out.x_labels |= 1u << map[v];
        if (g.graph.has_edge(v, g.y)) out.y_labels |= 1u << map[v];
    }
    return out;
}

// --- text format ---------------------------------------------------------------

std::string write_graph(const SimpleGraph& g) {
    std::ostringstream os;
    os << g.n << ' ' << g.edge_count() << " - -\n";
    for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
    return os.str();
}

std::string write_graph(const TerminalGraph& g) {
    std::ostringstream os;
    os << g.graph.n << ' ' << g.graph.edge_count() << ' ' << g.x << ' ' << g.y << '\n';
    for (auto [u, v] : g.graph.edges) os << u << ' ' << v << '\n';
    return os.str();
}

namespace {

std::string next_line(const std::string& text, size_t* pos) {
    while (*pos < text.size()) {
        size_t end = text.find('\n', *pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(*pos, end - *pos);
        *pos = end < text.size() ? end + 1 : end;
        // skip blank lines and '#' comments between records
        size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') return line;
    }
    throw graph_error("unexpected end of input");
}

}  // namespace

TerminalGraph parse_graph(const std::string& text, size_t* pos, bool* has_terminals) {
    std::istringstream hdr(next_line(text, pos));
    int n, m;
    std::string xs, ys;
    if (!(hdr >> n >> m >> xs >> ys)) throw graph_error("bad graph header");
    if (n < 0 || n > 32 || m < 0) throw graph_error("bad graph header");
    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) {
        std::istringstream ln(next_line(text, pos));
        int u, v;
        if (!(ln >> u >> v)) throw graph_error("bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v) throw graph_error("bad edge line");
        if (g.has_edge(u, v)) throw graph_error("duplicate edge");
        g.add_edge(u, v);
    }
    bool plain = xs == "-" && ys == "-";
    if (has_terminals) *has_terminals = !plain;
    if (plain) {
        // carrier with dummy terminals when possible; callers use .graph only
        if (n >= 2) return TerminalGraph(std::move(g), 0, 1);
        TerminalGraph t;
        t.graph = std::move(g);
        t.x = t.y = -1;
        return t;
    }
    int x = std::stoi(xs), y = std::stoi(ys);
    return TerminalGraph(std::move(g), x, y);
}

TerminalGraph parse_terminal_graph(const std::string& text) {
    size_t pos = 0;
    bool has = false;
    TerminalGraph g = parse_graph(text, &pos, &has);
    if (!has) throw graph_error("record has no terminals");
    return g;
}

SimpleGraph parse_simple_graph(const std::string& text) {
    size_t pos = 0;
    bool has = false;
    return parse_graph(text, &pos, &has).graph;
}

std::string write_xy_labelled(const XYLabelledGraph& h) {
    std::ostringstream os;
    os << h.graph.n << ' ' << h.graph.edge_count() << " |";
    os << " X:";
    for (int v = 0; v < h.graph.n; ++v)
        if ((h.x_labels >> v) & 1u) os << ' ' << v;
    os << " | Y:";
    for (int v = 0; v < h.graph.n; ++v)
        if ((h.y_labels >> v) & 1u) os << ' ' << v;
    os << '\n';
    for (auto [u, v] : h.graph.edges) os << u << ' ' << v << '\n';
    return os.str();
}

XYLabelledGraph parse_xy_labelled(const std::string& text) {
    size_t pos = 0;
    std::string hdr = next_line(text, &pos);
    std::istringstream hs(hdr);
    int n, m;
    std::string tok;
    if (!(hs >> n >> m >> tok) || tok != "|") throw graph_error("bad xy-labelled header");
    if (!(hs >> tok) || tok != "X:") throw graph_error("bad xy-labelled header");
    XYLabelledGraph out;
    out.graph = SimpleGraph(n);
    while (hs >> tok && tok != "|") out.x_labels |= 1u << std::stoi(tok);
    if (tok != "|") throw graph_error("bad xy-labelled header");
    if (!(hs >> tok) || tok != "Y:") throw graph_error("bad xy-labelled header");
    while (hs >> tok) out.y_labels |= 1u << std::stoi(tok);
    for (int i = 0; i < m; ++i) {
        std::istringstream ln(next_line(text, &pos));
        int u, v;
        if (!(ln >> u >> v)) throw graph_error("bad edge line");
        out.graph.add_edge(u, v);
    }
    return out;
}

}  // namespace genusforge
