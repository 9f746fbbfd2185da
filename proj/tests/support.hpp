#pragma once

// Shared test helpers: brute-force oracles built straight from the
// definitions (independent of the library's algorithms), small-instance
// generators, and shorthand constructors.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kshell/complex.hpp"
#include "kshell/expansion.hpp"
#include "kshell/graphs.hpp"
#include "kshell/shelling.hpp"

namespace ks = kshell;

namespace support {

// ---- shorthand constructors (single-character labels) ----

// cx("ab bc cd"): facets from whitespace-separated words, universe = letters
// in order of first appearance. "{}" is the empty facet.
inline ks::Complex cx(const std::string& facets) {
    std::istringstream ss(facets);
    std::string word;
    std::vector<std::string> universe;
    std::vector<std::vector<std::string>> faces;
    auto seen = [&](const std::string& l) {
        return std::find(universe.begin(), universe.end(), l) != universe.end();
    };
    while (ss >> word) {
        std::vector<std::string> face;
        if (word != "{}") {
            for (char c : word) {
                std::string l(1, c);
                if (!seen(l)) universe.push_back(l);
                face.push_back(l);
            }
        }
        faces.push_back(face);
    }
    return ks::Complex::normalize_labels(universe, faces);
}

// cx("abcdef", "abc aef cdf"): explicit universe.
inline ks::Complex cx(const std::string& universe, const std::string& facets) {
    std::vector<std::string> labels;
    for (char c : universe) labels.emplace_back(1, c);
    std::istringstream ss(facets);
    std::string word;
    std::vector<std::vector<std::string>> faces;
    while (ss >> word) {
        std::vector<std::string> face;
        if (word != "{}")
            for (char c : word) face.emplace_back(1, c);
        faces.push_back(face);
    }
    return ks::Complex::normalize_labels(labels, faces);
}

inline ks::Face fc(const ks::Complex& c, const std::string& labels) {
    std::vector<std::string> ls;
    for (char ch : labels) ls.emplace_back(1, ch);
    return c.face_from_labels(ls);
}

// Facet label strings ("abc" style), for comparisons that ignore universes.
inline std::set<std::string> facet_labels(const ks::Complex& c) {
    std::set<std::string> out;
    for (ks::Face f : c.facets()) {
        std::string s;
        for (const auto& l : c.labels_of(f)) s += l;
        out.insert(s);
    }
    return out;
}

// ---- brute-force oracles ----

// Every subset of the universe that is contained in some facet, found by
// scanning all 2^n subsets.
inline std::vector<ks::Face> oracle_faces(const ks::Complex& c) {
    std::vector<ks::Face> out;
    ks::Face full = c.full_mask();
    for (ks::Face m = 0;; ++m) {
        bool inside = false;
        for (ks::Face f : c.facets()) inside = inside || ks::face_subset(m, f);
        if (inside) out.push_back(m);
        if (m == full) break;
    }
    return out;
}

inline std::vector<ks::Face> oracle_maximal(std::vector<ks::Face> faces) {
    std::vector<ks::Face> out;
    for (ks::Face f : faces) {
        bool dom = false;
        for (ks::Face g : faces) dom = dom || (f != g && ks::face_subset(f, g));
        if (!dom && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Facets of the link by definition: filter all faces, then maximalize.
// Returned over the original universe (caller compares label sets).
inline std::vector<ks::Face> oracle_link_facets(const ks::Complex& c, ks::Face f) {
    std::vector<ks::Face> member;
    for (ks::Face g : oracle_faces(c))
        if ((g & f) == 0 && c.contains_face(g | f)) member.push_back(g);
    return oracle_maximal(member);
}

inline std::vector<ks::Face> oracle_deletion_facets(const ks::Complex& c, ks::Face f) {
    std::vector<ks::Face> member;
    for (ks::Face g : oracle_faces(c))
        if (!ks::face_subset(f, g)) member.push_back(g);
    return oracle_maximal(member);
}

// Step complex of an order by face enumeration: faces of <F_j> that are
// faces of the prefix, maximalized.
inline std::vector<ks::Face> oracle_step_facets(const std::vector<ks::Face>& facets,
                                                const std::vector<int>& order, int j) {
    ks::Face fj = facets[static_cast<std::size_t>(order[static_cast<std::size_t>(j - 1)])];
    std::vector<ks::Face> member;
    ks::Face sub = fj;
    while (true) {
        for (int p = 0; p < j - 1; ++p) {
            if (ks::face_subset(sub, facets[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])])) {
                member.push_back(sub);
                break;
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & fj;
    }
    return oracle_maximal(member);
}

// Literal acceptance test written directly from the definition.
inline bool oracle_is_k_shelling(const std::vector<ks::Face>& facets, const std::vector<int>& order,
                                 int k) {
    int r = static_cast<int>(order.size());
    for (int j = 2; j <= r; ++j) {
        ks::Face fj = facets[static_cast<std::size_t>(order[static_cast<std::size_t>(j - 1)])];
        std::vector<ks::Face> step = oracle_step_facets(facets, order, j);
        for (ks::Face s : step)
            if (ks::face_size(s) != ks::face_size(fj) - k) return false;
        if (step.size() > 1) {
            for (std::size_t a = 0; a < step.size(); ++a)
                for (std::size_t b = a + 1; b < step.size(); ++b)
                    if ((step[a] & step[b]) == 0 && (fj & ~(step[a] | step[b])) != 0) return false;
        }
    }
    return true;
}

// Classic textbook shellability of an order: every step complex is pure of
// dimension dim(F_j) - 1 (and nonempty).
inline bool oracle_is_classic_shelling(const std::vector<ks::Face>& facets,
                                       const std::vector<int>& order) {
    int r = static_cast<int>(order.size());
    for (int j = 2; j <= r; ++j) {
        ks::Face fj = facets[static_cast<std::size_t>(order[static_cast<std::size_t>(j - 1)])];
        std::vector<ks::Face> step = oracle_step_facets(facets, order, j);
        if (step.empty()) return false;
        for (ks::Face s : step)
            if (ks::face_size(s) != ks::face_size(fj) - 1) return false;
    }
    return true;
}

// Maximal independent sets by scanning all subsets.
inline std::vector<ks::Face> oracle_max_independent_sets(const ks::Graph& g) {
    std::vector<ks::Face> indep;
    ks::Face full = g.full_mask();
    for (ks::Face m = 0;; ++m) {
        if (g.is_independent(m)) indep.push_back(m);
        if (m == full) break;
    }
    return oracle_maximal(indep);
}

// Monomials of total degree d over n variables, as dense exponent vectors.
inline void oracle_monomials(int n, int d, std::vector<std::vector<int>>& out) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            exps[static_cast<std::size_t>(pos)] = left;
            out.push_back(exps);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (n > 0) rec(rec, 0, d);
}

// ---- instance generators ----

// All antichains of 1..max_facets nonempty subsets of {0..n-1}, as sorted
// mask lists. The universe stays n even when a vertex goes unused.
inline std::vector<std::vector<ks::Face>> all_antichains(int n, int max_facets) {
    std::vector<ks::Face> subsets;
    for (ks::Face m = 1; m < (ks::Face{1} << n); ++m) subsets.push_back(m);
    std::vector<std::vector<ks::Face>> out;
    std::vector<ks::Face> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!chosen.empty()) out.push_back(chosen);
        if (static_cast<int>(chosen.size()) == max_facets) return;
        for (std::size_t i = start; i < subsets.size(); ++i) {
            bool ok = true;
            for (ks::Face f : chosen)
                ok = ok && !ks::face_subset(f, subsets[i]) && !ks::face_subset(subsets[i], f);
            if (!ok) continue;
            chosen.push_back(subsets[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline ks::Universe letters(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return ks::Universe(labels);
}

// Random antichain complex on n vertices with at most max_facets facets.
inline ks::Complex random_complex(std::mt19937_64& rng, int n, int max_facets) {
    std::uniform_int_distribution<int> nf(1, max_facets);
    std::uniform_int_distribution<int> size(1, std::max(1, n - 1));
    std::vector<ks::Face> raw;
    int want = nf(rng);
    for (int i = 0; i < want * 3 && static_cast<int>(raw.size()) < want * 3; ++i) {
        int s = size(rng);
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
        std::shuffle(verts.begin(), verts.end(), rng);
        ks::Face f = 0;
        for (int v = 0; v < s; ++v) f |= ks::face_bit(verts[static_cast<std::size_t>(v)]);
        raw.push_back(f);
    }
    ks::Complex c = ks::Complex::normalize(letters(n), raw);
    if (c.facet_count() <= max_facets) return c;
    std::vector<ks::Face> trimmed(c.facets().begin(), c.facets().begin() + max_facets);
    return ks::Complex::normalize(letters(n), trimmed);
}

inline ks::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    ks::Graph g{letters(n)};
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

// Graph on n vertices from an edge bitmask (pairs in row-major u < v order).
inline ks::Graph graph_from_mask(int n, std::uint64_t mask) {
    ks::Graph g{letters(n)};
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

// ---- induced and product orders from the closure theorems ----

// Order induced on link(c, sigma) by a shelling order: the facets containing
// sigma, visited in shelling sequence, located in the link's facet list by
// label set.
inline ks::ShellingOrder induced_link_order(const ks::Complex& c, const ks::ShellingOrder& order,
                                            ks::Face sigma, const ks::Complex& lk) {
    std::map<std::vector<std::string>, int> position;
    for (int i = 0; i < lk.facet_count(); ++i)
        position[lk.labels_of(lk.facets()[static_cast<std::size_t>(i)])] = i;
    ks::ShellingOrder out{order.k, {}};
    for (int pos : order.order) {
        ks::Face f = c.facets()[static_cast<std::size_t>(pos)];
        if (!ks::face_subset(sigma, f)) continue;
        out.order.push_back(position.at(c.labels_of(f & ~sigma)));
    }
    return out;
}

// Product order on join(a, b) (facet lists are F-major by construction).
inline ks::ShellingOrder product_order(const ks::ShellingOrder& a, const ks::ShellingOrder& b,
                                       int b_count) {
    ks::ShellingOrder out{a.k, {}};
    for (int i : a.order)
        for (int j : b.order) out.order.push_back(i * b_count + j);
    return out;
}

// All permutations of 0..r-1 (for exhaustive order sweeps, r <= 6 or so).
inline std::vector<std::vector<int>> all_orders(int r) {
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace support
