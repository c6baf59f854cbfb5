#pragma once

#include <optional>
#include <vector>

#include "genusforge/embed.hpp"
#include "genusforge/graph.hpp"

namespace genusforge {

enum class Parameter { g, g_plus, g_a, g_a_plus };

int parameter_value(const ParameterProfile& p, Parameter which);
const char* parameter_name(Parameter which);  // "g", "g+", "ga", "ga+"

// dc_k(parameter, G): the operations of M(G) that drop the parameter by >= k.
struct DecreaseSet {
    Parameter parameter = Parameter::g;
    int k = 1;
    std::vector<MinorOperation> operations;  // in minor_operations(G) order

    bool contains(const MinorOperation& op) const;
};

// Profiles of uG for every u in minor_operations(g), in the same order.
// The parallel kernel and the serial reference must produce identical output;
// minor_profiles dispatches on the configured worker count.
std::vector<ParameterProfile> minor_profiles_serial(const TerminalGraph& g);
std::vector<ParameterProfile> minor_profiles_parallel(const TerminalGraph& g);
std::vector<ParameterProfile> minor_profiles(const TerminalGraph& g);

// Worker count for the parallel kernels: 0 = library default, 1 = serial.
void set_worker_count(int workers);
int worker_count();

DecreaseSet decreasing_set(const TerminalGraph& g, Parameter parameter, int k);

// True iff min_genus(G) = k+1 and every single deletion/contraction embeds
// in S_k (Lemma 1: obstructions are covered by minor-tight subgraphs).
bool is_obstruction(const SimpleGraph& g, int k);

// Minor-tightness of the part G1 in the xy-sum with a graph of profile p2.
// Connected uG1 is decided by the per-operation iff of Lemma 12 / Table 1
// (row selected by with_edge, eps+(G2), eta); disconnecting deletions fall
// outside the lemma and use Battle additivity directly. cross_check = true
// recomputes g(uG) by the 2-sum genus formula for every connected uG1 and
// throws on any disagreement with the table verdict.
bool part_is_minor_tight(const TerminalGraph& g1, const ParameterProfile& p2, bool with_edge,
                         bool cross_check = false);

// Lemma 14: the xy edge is minor-tight iff eta = 2 and some part has
// g(Gi/xy) < g+(Gi). Inputs are the parts' profiles and quotient genera.
bool xy_edge_is_tight(const ParameterProfile& p1, int g1_over_xy, const ParameterProfile& p2,
                      int g2_over_xy);

struct ClassMembership {
    bool member = false;
    int k = 0;  // genus index: parameter(G) - 1
};

// M(G) = dc_1(parameter)? The xy-free variant (allow_xy = false) throws on a
// graph with the xy edge present. Uses the vertex-cover shortcut (Lemma 15)
// to reject early when some non-terminal deletion keeps the parameter.
ClassMembership class_membership(const TerminalGraph& g, Parameter parameter,
                                 bool allow_xy = false);

// Class D: dumbbells with a unique bar b, theta = 0, every operation off the
// bar in dc_1 g, and eps+(G/b) = 1.
bool dumbbell_class_D(const TerminalGraph& g);

// Hopper detectors. Level 2: G in C°(ga+) with eps+ = 1. Level 1:
// M(G) = dc1 ga+ ∪ dc2 g and G not in C°(ga+). Level 0: M(G) = dc1 g ∪
// dc2 ga+ and G not in C°(g). Throws if a detected hopper violates the
// consequences of the level lemmas (C°(g+) membership, eps+/theta values).
std::optional<int> hopper_level(const TerminalGraph& g);

enum class ClassKind { Cg, CgPlus, Cga, CgaPlus, D, H0, H1, H2, None };

const char* class_kind_name(ClassKind kind);
std::optional<ClassKind> class_kind_from_name(const std::string& name);

struct ClassLabel {
    ClassKind kind = ClassKind::None;
    // genus index: parameter(G) - 1 for the critical classes, g(G) for D,
    // g+(G) for hoppers.
    int k = 0;

    bool operator==(const ClassLabel& o) const = default;
    bool operator<(const ClassLabel& o) const {
        return kind != o.kind ? kind < o.kind : k < o.k;
    }
};

// The Table-3 classification of a minor-tight part: the labels predicted for
// the (with_edge, eps+(G2), eta) row, each verified by its membership test.
// Returns the verified labels; empty when the part is not minor-tight at all;
// throws "classification violation" when a minor-tight part matches none of
// the predicted classes (that would falsify the theorem or the engine).
std::vector<ClassLabel> classify_part(const TerminalGraph& g1, const ParameterProfile& p2,
                                      bool with_edge);

}  // namespace genusforge
