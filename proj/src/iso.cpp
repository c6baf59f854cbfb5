#include "genusforge/iso.hpp"

#include <algorithm>
#include <bit>

namespace genusforge {

namespace {

// --- backtracking isomorphism ------------------------------------------------

struct IsoSearch {
    const SimpleGraph& a;
    const SimpleGraph& b;
    std::vector<int> map;      // a-vertex -> b-vertex or -1
    uint32_t used = 0;         // b-vertices already hit
    std::vector<int> order;    // a-vertices in assignment order

    IsoSearch(const SimpleGraph& a_, const SimpleGraph& b_)
        : a(a_), b(b_), map(a_.n, -1) {}

    bool consistent(int av, int bv) const {
        if (a.degree(av) != b.degree(bv)) return false;
        for (int u = 0; u < a.n; ++u) {
            if (map[u] < 0) continue;
            if (a.has_edge(av, u) != b.has_edge(bv, map[u])) return false;
        }
        return true;
    }

    bool extend(size_t idx) {
        if (idx == order.size()) return true;
        int av = order[idx];
        if (map[av] >= 0) return extend(idx + 1);
        for (int bv = 0; bv < b.n; ++bv) {
            if ((used >> bv) & 1u) continue;
            if (!consistent(av, bv)) continue;
            map[av] = bv;
            used |= 1u << bv;
            if (extend(idx + 1)) return true;
            map[av] = -1;
            used &= ~(1u << bv);
        }
        return false;
    }
};

bool degree_sequences_match(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

std::vector<int> degree_desc_order(const SimpleGraph& g) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return g.degree(u) > g.degree(v); });
    return order;
}

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (!degree_sequences_match(a, b)) return false;
    IsoSearch s(a, b);
    s.order = degree_desc_order(a);
    return s.extend(0);
}

bool are_isomorphic(const TerminalGraph& a, const TerminalGraph& b) {
    const SimpleGraph& ga = a.graph;
    const SimpleGraph& gb = b.graph;
    if (ga.n != gb.n || ga.edge_count() != gb.edge_count()) return false;
    if (!degree_sequences_match(ga, gb)) return false;
    for (int swap = 0; swap < 2; ++swap) {
        int bx = swap ? b.y : b.x;
        int by = swap ? b.x : b.y;
        IsoSearch s(ga, gb);
        if (!s.consistent(a.x, bx)) continue;
        s.map[a.x] = bx;
        s.used |= 1u << bx;
        if (!s.consistent(a.y, by)) continue;
        s.map[a.y] = by;
        s.used |= 1u << by;
        s.order = degree_desc_order(ga);
        if (s.extend(0)) return true;
    }
    return false;
}

// --- canonical code ------------------------------------------------------------
//
// The code is the upper-triangle adjacency bitstring read column by column:
// for position k = 1..n-1 the bits (0,k), (1,k), ..., (k-1,k). Because the
// bitstring is prefix-lexicographic over columns, a minimal permutation must
// pick at each position a candidate whose column pattern (adjacency to the
// already-placed prefix) is minimal; ties branch.

namespace {

struct CanonSearch {
    const SimpleGraph& g;
    std::vector<int> place;              // position -> vertex
    std::vector<uint32_t> best_cols;     // best column patterns found so far
    bool have_best = false;

    explicit CanonSearch(const SimpleGraph& g_) : g(g_) {}

    // Pattern of candidate c against the k placed vertices: bit for position i
    // shifted so earlier positions are more significant.
    uint32_t column(int c, int k) const {
        uint32_t p = 0;
        for (int i = 0; i < k; ++i)
            p |= static_cast<uint32_t>(g.has_edge(place[i], c)) << (k - 1 - i);
        return p;
    }

    // cmp: -1 current path already beats best, 0 still equal, pruned if worse.
    void extend(int k, uint32_t remaining, int cmp, std::vector<uint32_t>& cols) {
        if (k == g.n) {
            if (!have_best || cols < best_cols) {
                best_cols = cols;
                have_best = true;
            }
            return;
        }
        uint32_t min_pat = ~0u;
        uint32_t rest = remaining;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            min_pat = std::min(min_pat, column(c, k));
        }
        int ncmp = cmp;
        if (cmp == 0 && have_best) {
            if (min_pat > best_cols[k]) return;
            if (min_pat < best_cols[k]) ncmp = -1;
        }
        rest = remaining;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            if (column(c, k) != min_pat) continue;
            place[k] = c;
            cols[k] = min_pat;
            extend(k + 1, remaining & ~(1u << c), ncmp, cols);
            if (ncmp == 0 && have_best && min_pat > best_cols[k]) return;  // best improved
        }
    }

    // Runs the search with `forced` as a fixed prefix (may be empty).
    void run(const std::vector<int>& forced) {
        uint32_t remaining = g.n == 32 ? ~0u : (1u << g.n) - 1;
        place.assign(g.n, -1);
        std::vector<uint32_t> cols(g.n, 0);
        int cmp = 0;
        for (size_t k = 0; k < forced.size(); ++k) {
            place[k] = forced[k];
            cols[k] = column(forced[k], static_cast<int>(k));
            remaining &= ~(1u << forced[k]);
            if (cmp == 0 && have_best) {
                if (cols[k] > best_cols[k]) return;  // forced prefix already worse
                if (cols[k] < best_cols[k]) cmp = -1;
            }
        }
        extend(static_cast<int>(forced.size()), remaining, cmp, cols);
    }

    std::string pack(char tag) const {
        std::string out;
        out.push_back(tag);
        out.push_back(static_cast<char>(g.n));
        int bit = 0;
        uint8_t cur = 0;
        auto push_bit = [&](bool b) {
            cur = static_cast<uint8_t>(cur << 1 | (b ? 1 : 0));
            if (++bit == 8) {
                out.push_back(static_cast<char>(cur));
                bit = 0;
                cur = 0;
            }
        };
        for (int k = 1; k < g.n; ++k)
            for (int i = 0; i < k; ++i) push_bit((best_cols[k] >> (k - 1 - i)) & 1u);
        if (bit) out.push_back(static_cast<char>(cur << (8 - bit)));
        return out;
    }
};

}  // namespace

std::string canonical_code(const SimpleGraph& g) {
    CanonSearch s(g);
    s.run({});
    return s.pack('P');
}

std::string canonical_code(const TerminalGraph& g) {
    CanonSearch s(g.graph);
    s.run({g.x, g.y});
    s.run({g.y, g.x});
    return s.pack('T');
}

std::string code_hex(const std::string& code) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (unsigned char c : code) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace genusforge
