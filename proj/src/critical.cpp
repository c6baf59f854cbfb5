#include "genusforge/critical.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genusforge {

int parameter_value(const ParameterProfile& p, Parameter which) {
    switch (which) {
        case Parameter::g: return p.g;
        case Parameter::g_plus: return p.g_plus;
        case Parameter::g_a: return p.g_a;
        case Parameter::g_a_plus: return p.g_a_plus;
    }
    throw graph_error("bad parameter");
}

const char* parameter_name(Parameter which) {
    switch (which) {
        case Parameter::g: return "g";
        case Parameter::g_plus: return "g+";
        case Parameter::g_a: return "ga";
        case Parameter::g_a_plus: return "ga+";
    }
    throw graph_error("bad parameter");
}

bool DecreaseSet::contains(const MinorOperation& op) const {
    return std::find(operations.begin(), operations.end(), op) != operations.end();
}

// --- minor profiles (parallel kernel + serial reference) ----------------------

namespace {
int g_workers = 0;  // 0 = library default
}

void set_worker_count(int workers) {
    g_workers = workers < 0 ? 0 : workers;
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#endif
}

int worker_count() { return g_workers; }

std::vector<ParameterProfile> minor_profiles_serial(const TerminalGraph& g) {
    auto ops = minor_operations(g);
    std::vector<ParameterProfile> out(ops.size());
    for (size_t i = 0; i < ops.size(); ++i) out[i] = parameter_profile(apply_op(g, ops[i]));
    return out;
}

std::vector<ParameterProfile> minor_profiles_parallel(const TerminalGraph& g) {
    auto ops = minor_operations(g);
    std::vector<ParameterProfile> out(ops.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
        try {
            out[i] = parameter_profile(apply_op(g, ops[i]));
        } catch (...) {
#pragma omp critical
            err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<ParameterProfile> minor_profiles(const TerminalGraph& g) {
    return g_workers == 1 ? minor_profiles_serial(g) : minor_profiles_parallel(g);
}

// --- decrease sets -------------------------------------------------------------

namespace {

bool drops(const ParameterProfile& before, const ParameterProfile& after, Parameter p, int k) {
    return parameter_value(after, p) <= parameter_value(before, p) - k;
}

}  // namespace

DecreaseSet decreasing_set(const TerminalGraph& g, Parameter parameter, int k) {
    if (k < 1) throw graph_error("decrease requires k >= 1");
    DecreaseSet out;
    out.parameter = parameter;
    out.k = k;
    ParameterProfile base = parameter_profile(g);
    auto ops = minor_operations(g);
    auto profs = minor_profiles(g);
    for (size_t i = 0; i < ops.size(); ++i)
        if (drops(base, profs[i], parameter, k)) out.operations.push_back(ops[i]);
    return out;
}

bool is_obstruction(const SimpleGraph& g, int k) {
    if (k < 0) throw graph_error("is_obstruction requires k >= 0");
    if (embeds_in(g, k) || !embeds_in(g, k + 1)) return false;
    for (const MinorOperation& op : minor_operations(g)) {
        SimpleGraph m = op.kind == MinorKind::Delete ? delete_edge(g, op.edge)
                                                     : contract_edge(g, op.edge);
        if (!embeds_in(m, k)) return false;
    }
    return true;
}

// --- minor-tightness of a part ---------------------------------------------------

namespace {

// Per-operation iff of Lemma 12 / Table 1 for connected uG1; dc sets refer to
// the part's own parameters, the row is picked by (with_edge, eps+(G2), eta).
bool table_row_allows(const ParameterProfile& p1, const ParameterProfile& pm, int eps2_plus,
                      int h, bool with_edge) {
    if (with_edge)
        return eps2_plus == 0 ? drops(p1, pm, Parameter::g_plus, 1)
                              : drops(p1, pm, Parameter::g_a_plus, 1);
    switch (h) {
        case -1:
            return drops(p1, pm, Parameter::g_a_plus, 1);
        case 0:
            return eps2_plus == 0
                       ? drops(p1, pm, Parameter::g_plus, 1)
                       : drops(p1, pm, Parameter::g, 2) || drops(p1, pm, Parameter::g_a_plus, 1);
        case 1:
            return drops(p1, pm, Parameter::g, 1) ||
                   (eps2_plus == 0 ? drops(p1, pm, Parameter::g_plus, 1)
                                   : drops(p1, pm, Parameter::g_a_plus, 1));
        case 2:
            return eps2_plus == 0
                       ? drops(p1, pm, Parameter::g, 1)
                       : drops(p1, pm, Parameter::g, 1) || drops(p1, pm, Parameter::g_a_plus, 2);
    }
    throw graph_error("eta out of range");
}

// Exact g(uG) where uG is the xy-sum of uG1 (= mu) with a graph of profile p2.
// Valid for disconnected mu as well: components without a terminal shift g and
// g+ of the profile equally and leave eps+ alone, so the 2-sum formula stays
// exact; when the terminals end up in different components (a bar was
// deleted), the pieces hang on G2 as separate blocks and Theorem-2 additivity
// applies instead.
int sum_genus_after_op(const TerminalGraph& mu, const ParameterProfile& p2, bool with_edge) {
    bool we = with_edge || mu.has_xy_edge();
    TerminalGraph core = mu;
    if (core.has_xy_edge()) core.graph.remove_edge(core.x, core.y);
    ParameterProfile ph = parameter_profile(core);
    uint32_t cx = core.graph.component_of(core.x);
    if (!((cx >> core.y) & 1u)) return ph.g + (we ? p2.g_plus : p2.g);
    return two_sum_genus(ph, p2, we).genus;
}

}  // namespace

bool part_is_minor_tight(const TerminalGraph& g1, const ParameterProfile& p2, bool with_edge,
                         bool cross_check) {
    if (g1.has_xy_edge()) throw graph_error("part must avoid xy");
    if (!g1.graph.is_connected()) throw graph_error("part must be connected");
    ParameterProfile p1 = parameter_profile(g1);
    int h = eta(p1, p2);
    int total = two_sum_genus(p1, p2, with_edge).genus;
    for (const MinorOperation& op : minor_operations(g1)) {
        TerminalGraph mu = apply_op(g1, op);
        bool ok;
        if (mu.graph.is_connected()) {
            ok = table_row_allows(p1, parameter_profile(mu), p2.epsilon_plus, h, with_edge);
            if (cross_check && ok != (sum_genus_after_op(mu, p2, with_edge) < total))
                throw graph_error("minor-tightness cross-check failed");
        } else {
            // a disconnecting deletion falls outside Lemma 12; additivity is exact
            ok = sum_genus_after_op(mu, p2, with_edge) < total;
        }
        if (!ok) return false;
    }
    return true;
}

bool xy_edge_is_tight(const ParameterProfile& p1, int g1_over_xy, const ParameterProfile& p2,
                      int g2_over_xy) {
    return eta(p1, p2) == 2 && (g1_over_xy < p1.g_plus || g2_over_xy < p2.g_plus);
}

// --- class membership ------------------------------------------------------------

ClassMembership class_membership(const TerminalGraph& g, Parameter parameter, bool allow_xy) {
    if (!allow_xy && g.has_xy_edge()) throw graph_error("class requires xy-free graph");
    ParameterProfile base = parameter_profile(g);
    ClassMembership out;
    out.k = parameter_value(base, parameter) - 1;
    // Lemma-15 shortcut: a non-terminal vertex whose removal keeps the
    // parameter pins every operation on its edges outside dc_1.
    for (int v = 0; v < g.graph.n; ++v) {
        if (g.is_terminal(v) || g.graph.degree(v) == 0) continue;
        uint32_t all = g.graph.n == 32 ? ~0u : (1u << g.graph.n) - 1;
        TerminalGraph rest(g.graph.induced(all & ~(1u << v)), g.x - (g.x > v ? 1 : 0),
                           g.y - (g.y > v ? 1 : 0));
        if (parameter_value(parameter_profile(rest), parameter) ==
            parameter_value(base, parameter))
            return out;
    }
    for (const ParameterProfile& pm : minor_profiles(g))
        if (!drops(base, pm, parameter, 1)) return out;
    out.member = true;
    return out;
}

bool dumbbell_class_D(const TerminalGraph& g) {
    if (g.has_xy_edge()) return false;
    auto bs = bars(g);
    if (bs.size() != 1) return false;  // not a dumbbell, or the bar is not unique
    Edge b = bs[0];
    ParameterProfile base = parameter_profile(g);
    if (base.theta != 0) return false;
    if (parameter_profile(contract_edge(g, b)).epsilon_plus != 1) return false;
    for (const MinorOperation& op : minor_operations(g)) {
        if (op.edge == b) continue;
        if (!drops(base, parameter_profile(apply_op(g, op)), Parameter::g, 1)) return false;
    }
    return true;
}

std::optional<int> hopper_level(const TerminalGraph& g) {
    if (g.has_xy_edge()) throw graph_error("hopper test requires xy-free graph");
    ParameterProfile base = parameter_profile(g);
    bool in_c_gap = true, in_c_g = true, in_c_gplus = true, lvl1 = true, lvl0 = true;
    for (const ParameterProfile& pm : minor_profiles(g)) {
        bool d_gap1 = drops(base, pm, Parameter::g_a_plus, 1);
        bool d_gap2 = drops(base, pm, Parameter::g_a_plus, 2);
        bool d_g1 = drops(base, pm, Parameter::g, 1);
        bool d_g2 = drops(base, pm, Parameter::g, 2);
        in_c_gap = in_c_gap && d_gap1;
        in_c_g = in_c_g && d_g1;
        in_c_gplus = in_c_gplus && drops(base, pm, Parameter::g_plus, 1);
        lvl1 = lvl1 && (d_gap1 || d_g2);
        lvl0 = lvl0 && (d_g1 || d_gap2);
    }
    auto consistent = [](bool ok) {
        if (!ok) throw graph_error("hopper consistency violated");
    };
    if (in_c_gap && base.epsilon_plus == 1) {
        consistent(in_c_gplus);  // (S1) lifts C°(ga+) into C°(g+) when eps+ = 1
        return 2;
    }
    if (lvl1 && !in_c_gap) {
        consistent(in_c_gplus && base.epsilon_plus == 1 && base.theta == 0);
        return 1;
    }
    if (lvl0 && !in_c_g) {
        consistent(in_c_gplus && base.epsilon_plus == 0 && base.theta == 1);
        return 0;
    }
    return std::nullopt;
}

// --- the Table-3 part classifier ---------------------------------------------------

const char* class_kind_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::Cg: return "C(g)";
        case ClassKind::CgPlus: return "C(g+)";
        case ClassKind::Cga: return "C(ga)";
        case ClassKind::CgaPlus: return "C(ga+)";
        case ClassKind::D: return "D";
        case ClassKind::H0: return "H0";
        case ClassKind::H1: return "H1";
        case ClassKind::H2: return "H2";
        case ClassKind::None: return "none";
    }
    throw graph_error("bad class kind");
}

std::optional<ClassKind> class_kind_from_name(const std::string& name) {
    for (ClassKind k : {ClassKind::Cg, ClassKind::CgPlus, ClassKind::Cga, ClassKind::CgaPlus,
                        ClassKind::D, ClassKind::H0, ClassKind::H1, ClassKind::H2,
                        ClassKind::None})
        if (name == class_kind_name(k)) return k;
    return std::nullopt;
}

std::vector<ClassLabel> classify_part(const TerminalGraph& g1, const ParameterProfile& p2,
                                      bool with_edge) {
    if (!part_is_minor_tight(g1, p2, with_edge)) return {};
    ParameterProfile p1 = parameter_profile(g1);
    int h = eta(p1, p2);
    std::vector<ClassKind> predicted;
    if (with_edge) {
        predicted = {p2.epsilon_plus == 0 ? ClassKind::CgPlus : ClassKind::CgaPlus};
    } else {
        switch (h) {
            case -1:
                predicted = {ClassKind::CgaPlus};
                break;
            case 0:
                if (p2.epsilon_plus == 0)
                    predicted = {ClassKind::CgPlus};
                else
                    predicted = {ClassKind::CgaPlus, ClassKind::H1};
                break;
            case 1:
                if (p2.epsilon_plus == 0)
                    predicted = {ClassKind::Cg, ClassKind::CgPlus};
                else
                    predicted = {ClassKind::Cg, ClassKind::Cga, ClassKind::CgaPlus,
                                 ClassKind::D};
                break;
            case 2:
                if (p2.epsilon_plus == 0)
                    predicted = {ClassKind::Cg};
                else
                    predicted = {ClassKind::Cg, ClassKind::H0};
                break;
            default:
                throw graph_error("eta out of range");
        }
    }
    std::vector<ClassLabel> verified;
    std::optional<int> hop;
    bool hop_known = false;
    for (ClassKind kind : predicted) {
        bool member = false;
        int k = 0;
        switch (kind) {
            case ClassKind::Cg:
                member = class_membership(g1, Parameter::g).member;
                k = p1.g - 1;
                break;
            case ClassKind::CgPlus:
                member = class_membership(g1, Parameter::g_plus).member;
                k = p1.g_plus - 1;
                break;
            case ClassKind::Cga:
                member = class_membership(g1, Parameter::g_a).member;
                k = p1.g_a - 1;
                break;
            case ClassKind::CgaPlus:
                member = class_membership(g1, Parameter::g_a_plus).member;
                k = p1.g_a_plus - 1;
                break;
            case ClassKind::D:
                member = dumbbell_class_D(g1);
                k = p1.g;
                break;
            case ClassKind::H0:
            case ClassKind::H1:
                if (!hop_known) {
                    hop = hopper_level(g1);
                    hop_known = true;
                }
                member = hop.has_value() && *hop == (kind == ClassKind::H0 ? 0 : 1);
                k = p1.g_plus;
                break;
            default:
                break;
        }
        if (member) verified.push_back({kind, k});
    }
    if (verified.empty()) throw graph_error("classification violation");
    return verified;
}

}  // namespace genusforge
