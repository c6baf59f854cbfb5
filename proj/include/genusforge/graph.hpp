#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genusforge {

// Thrown on domain errors (missing edge, forbidden contraction, bad input).
struct graph_error : std::runtime_error {
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

using Edge = std::pair<int, int>;  // always stored with first < second

// Undirected simple graph on vertices 0..n-1. Vertices can be isolated;
// edges are kept sorted and deduplicated. Fits graphs up to 32 vertices,
// adjacency is a bitmask per vertex.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges;        // sorted lexicographically, u < v
    std::vector<uint32_t> adj;      // adj[v] = neighbor bitmask

    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);
    SimpleGraph(int vertex_count, std::vector<Edge> edge_list);

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const {
        return u >= 0 && u < n && v >= 0 && v < n && (adj[u] >> v) & 1u;
    }
    int degree(int v) const;
    void add_edge(int u, int v);     // no-op if already present
    void remove_edge(int u, int v);  // throws if absent

    bool operator==(const SimpleGraph& o) const { return n == o.n && edges == o.edges; }
    bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

    // Connectivity helpers.
    uint32_t component_of(int v) const;          // vertex bitmask
    std::vector<uint32_t> components() const;    // all components as bitmasks
    bool is_connected() const;                   // true for the empty graph

    // Induced subgraph on the vertices of `mask`, ids compacted in mask order.
    SimpleGraph induced(uint32_t mask) const;

    static SimpleGraph complete(int k);
    static SimpleGraph complete_bipartite(int a, int b);

private:
    void rebuild_adj();
};

// A simple graph with an ordered pair of distinct terminals (x, y).
struct TerminalGraph {
    SimpleGraph graph;
    int x = 0;
    int y = 1;

    TerminalGraph() = default;
    TerminalGraph(SimpleGraph g, int x_, int y_);

    bool has_xy_edge() const { return graph.has_edge(x, y); }
    // Membership in the xy-edge-free class.
    bool in_g_circ() const { return !has_xy_edge(); }
    bool is_terminal(int v) const { return v == x || v == y; }

    bool operator==(const TerminalGraph& o) const {
        return graph == o.graph && x == o.x && y == o.y;
    }
};

// XY-labelled view of a graph in the xy-edge-free class: the graph minus
// both terminals, with each remaining vertex marked by its adjacency to x / y.
struct XYLabelledGraph {
    SimpleGraph graph;
    uint32_t x_labels = 0;  // bitmask over graph vertices
    uint32_t y_labels = 0;
};

enum class MinorKind { Delete, Contract };

struct MinorOperation {
    Edge edge;
    MinorKind kind;
    bool operator==(const MinorOperation& o) const { return edge == o.edge && kind == o.kind; }
};

// --- minor-operations ------------------------------------------------------

TerminalGraph delete_edge(const TerminalGraph& g, Edge e);
// Contracts e (never the xy edge); merged vertex inherits terminal status,
// parallel edges are simplified, vertex ids compacted.
TerminalGraph contract_edge(const TerminalGraph& g, Edge e);
TerminalGraph apply_op(const TerminalGraph& g, const MinorOperation& op);

// Plain-graph variants (no terminal bookkeeping, contraction of any edge allowed).
SimpleGraph delete_edge(const SimpleGraph& g, Edge e);
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);

// Identification of the two terminals into one plain vertex (edge xy not required).
SimpleGraph identify_terminals(const TerminalGraph& g);

// G plus the edge xy (idempotent).
TerminalGraph with_xy_edge(const TerminalGraph& g);

// The operation set M(G): sorted edges, delete before contract, (xy,/) excluded.
std::vector<MinorOperation> minor_operations(const TerminalGraph& g);
// All deletions and contractions of a plain graph.
std::vector<MinorOperation> minor_operations(const SimpleGraph& g);

enum class SumOrientation { Straight, Swapped };

// Glues g1 and g2 at their terminals (x1~x2, y1~y2 for Straight); both parts
// must avoid the xy edge. Vertices of the result: terminals first as x=0, y=1.
TerminalGraph xy_sum(const TerminalGraph& g1, const TerminalGraph& g2,
                     SumOrientation orientation, bool with_edge);

// Standard block decomposition; cut vertices appear in several blocks,
// vertex ids compacted per block. Isolated vertices yield no block.
std::vector<SimpleGraph> blocks(const SimpleGraph& g);

// Cut-edges whose deletion separates x from y ("bars"); nonempty iff dumbbell.
std::vector<Edge> bars(const TerminalGraph& g);

// --- XY-labelled conversion -------------------------------------------------

TerminalGraph from_xy_labelled(const XYLabelledGraph& h);
XYLabelledGraph to_xy_labelled(const TerminalGraph& g);  // throws if xy present

// --- text format -------------------------------------------------------------
//
// One graph per record:
//   n m x y        (terminals, or "- -" for a plain graph)
//   u v            (m lines, 0-based, u < v)

std::string write_graph(const SimpleGraph& g);
std::string write_graph(const TerminalGraph& g);
// Parses one record starting at *pos; advances *pos past it. has_terminals
// reports whether the record carried terminals (result.x/y valid then).
TerminalGraph parse_graph(const std::string& text, size_t* pos, bool* has_terminals);
TerminalGraph parse_terminal_graph(const std::string& text);
SimpleGraph parse_simple_graph(const std::string& text);

// XY-labelled record: "n m | X: i j ... | Y: p q ..." then m edge lines.
std::string write_xy_labelled(const XYLabelledGraph& h);
XYLabelledGraph parse_xy_labelled(const std::string& text);

}  // namespace genusforge
