#include "kshell/graphs.hpp"

#include <algorithm>
#include <unordered_map>

namespace kshell {

Graph::Graph(Universe vertices) : vertices_(std::move(vertices)) {
    adj_.assign(static_cast<std::size_t>(vertices_.size()), 0);
}

Graph::Graph(Universe vertices, const std::vector<std::pair<int, int>>& edges) : Graph(std::move(vertices)) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= face_bit(v);
    adj_[static_cast<std::size_t>(v)] |= face_bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : face_indices(adj_[static_cast<std::size_t>(u)] & ~((face_bit(u) << 1) - 1)))
            out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

bool Graph::is_independent(Face s) const {
    for (int v : face_indices(s))
        if ((adj_[static_cast<std::size_t>(v)] & s) != 0) return false;
    return true;
}

Face open_neighborhood(const Graph& g, Face u) {
    if (!face_subset(u, g.full_mask())) throw DomainError("vertex set exceeds the graph");
    Face n = 0;
    for (int v : face_indices(u)) n |= g.adjacency(v);
    return n;
}

Face closed_neighborhood(const Graph& g, Face u) { return open_neighborhood(g, u) | u; }

Graph induced_subgraph(const Graph& g, Face keep) {
    if (!face_subset(keep, g.full_mask())) throw DomainError("vertex set exceeds the graph");
    std::vector<std::string> labels;
    std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : face_indices(keep)) {
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(g.vertices().label(v));
    }
    Graph out{Universe(std::move(labels))};
    for (int v : face_indices(keep))
        for (int w : face_indices(g.adjacency(v) & keep))
            if (v < w) out.add_edge(new_index[static_cast<std::size_t>(v)], new_index[static_cast<std::size_t>(w)]);
    return out;
}

namespace {

// Maximal cliques of the complement = maximal independent sets of g.
void bron_kerbosch(const std::vector<Face>& comp_adj, Face r, Face p, Face x, std::vector<Face>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P ∪ X with the most neighbours in P.
    int pivot = -1, best = -1;
    for (int v : face_indices(p | x)) {
        int deg = face_size(comp_adj[static_cast<std::size_t>(v)] & p);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    Face candidates = p & ~comp_adj[static_cast<std::size_t>(pivot)];
    for (int v : face_indices(candidates)) {
        Face nb = comp_adj[static_cast<std::size_t>(v)];
        bron_kerbosch(comp_adj, r | face_bit(v), p & nb, x & nb, out);
        p &= ~face_bit(v);
        x |= face_bit(v);
    }
}

std::vector<Face> maximal_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {kEmptyFace};
    std::vector<Face> comp(static_cast<std::size_t>(n));
    Face full = g.full_mask();
    for (int v = 0; v < n; ++v) comp[static_cast<std::size_t>(v)] = full & ~g.adjacency(v) & ~face_bit(v);
    std::vector<Face> out;
    bron_kerbosch(comp, 0, full, 0, out);
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

}  // namespace

Complex independence_complex(const Graph& g) {
    return Complex(g.vertices(), maximal_independent_sets(g));
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) gens.push_back(Monomial::squarefree(face_bit(u) | face_bit(v)));
    return MonomialIdeal(g.vertices(), std::move(gens));
}

Graph duplicate(const Graph& g, const ExpansionVector& alpha) {
    if (alpha.size() != g.vertex_count())
        throw DomainError("expansion vector length does not match the vertex count");
    Universe target = expanded_universe(g.vertices(), alpha);
    std::vector<int> offset(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + alpha.at(v);
    Graph out{std::move(target)};
    for (auto [u, v] : g.edges())
        for (int cu = 0; cu < alpha.at(u); ++cu)
            for (int cv = 0; cv < alpha.at(v); ++cv)
                out.add_edge(offset[static_cast<std::size_t>(u)] + cu, offset[static_cast<std::size_t>(v)] + cv);
    return out;
}

namespace {

// Non-adjacency classes of the subgraph induced on `scope`; empty result
// when the classes are inconsistent (the induced graph is not complete
// multipartite).
std::vector<Face> multipartite_parts(const Graph& g, Face scope) {
    std::vector<Face> parts;
    Face assigned = 0;
    for (int v : face_indices(scope)) {
        if (face_contains(assigned, v)) continue;
        Face part = scope & ~(g.adjacency(v) & scope) ;
        part &= ~assigned;  // a fresh class must not touch earlier ones
        // Every member must induce exactly the same class.
        for (int u : face_indices(part)) {
            Face check = scope & ~(g.adjacency(u) & scope);
            if (check != (scope & ~(g.adjacency(v) & scope))) return {};
        }
        parts.push_back(part);
        assigned |= part;
    }
    // Cross-part pairs must all be adjacent.
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            for (int u : face_indices(parts[a]))
                if ((g.adjacency(u) & parts[b]) != parts[b]) return {};
    return parts;
}

SimplicialSetResult simplicial_set_in_scope(const Graph& g, Face scope, Face s, int k) {
    SimplicialSetResult res;
    if (s == 0) throw DomainError("the candidate set must be nonempty");
    if (!face_subset(s, scope)) throw DomainError("candidate set exceeds the graph");
    for (int v : face_indices(s)) {
        if ((g.adjacency(v) & scope & s) != 0) {
            res.reason = "candidate set is not independent";
            return res;
        }
    }
    Face nbhd = s;
    for (int v : face_indices(s)) nbhd |= g.adjacency(v) & scope;

    std::vector<Face> parts = multipartite_parts(g, nbhd);
    if (parts.empty()) {
        res.reason = "closed neighborhood is not complete multipartite";
        return res;
    }
    for (Face p : parts) {
        if (face_size(p) != k) {
            res.reason = "a part has size different from k";
            return res;
        }
    }
    // Twin condition: equal open neighborhoods inside every part.
    for (Face p : parts) {
        std::vector<int> members = face_indices(p);
        for (std::size_t i = 1; i < members.size(); ++i) {
            if ((g.adjacency(members[i]) & scope) != (g.adjacency(members[0]) & scope)) {
                res.reason = "a part contains vertices with different neighborhoods";
                return res;
            }
        }
    }
    // S itself must be one of the parts (not a proper subset or a union).
    bool s_is_part = false;
    for (Face p : parts) s_is_part = s_is_part || p == s;
    if (!s_is_part) {
        res.reason = "candidate set is not a single part of its closed neighborhood";
        return res;
    }
    std::sort(parts.begin(), parts.end(), face_lex_less);
    res.ok = true;
    res.parts = std::move(parts);
    return res;
}

}  // namespace

SimplicialSetResult is_k_simplicial_set(const Graph& g, Face s, int k) {
    if (!face_subset(s, g.full_mask())) throw DomainError("candidate set exceeds the graph");
    return simplicial_set_in_scope(g, g.full_mask(), s, k);
}

std::vector<std::pair<Face, std::vector<Face>>> find_k_simplicial_sets(const Graph& g, int k) {
    std::vector<std::pair<Face, std::vector<Face>>> out;
    int n = g.vertex_count();
    if (k < 1 || k > n) return out;
    // k-subsets in lexicographic order of their index sequences.
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        Face s = 0;
        for (int i : pick) s |= face_bit(i);
        if (g.is_independent(s)) {
            SimplicialSetResult r = is_k_simplicial_set(g, s, k);
            if (r.ok) out.emplace_back(s, std::move(r.parts));
        }
        int pos = k - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i) - 1] + 1;
    }
    return out;
}

namespace {

enum class SubStatus { accept, reject, undecided };

struct SubResult {
    SubStatus status = SubStatus::reject;
    std::vector<Face> order;  // facets of the sub-complex as root-graph vertex masks
};

struct GraphDecider {
    const Graph& g;
    int k;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::unordered_map<Face, SubResult> memo;

    GraphDecider(const Graph& graph, int kk, const SearchLimits& limits) : g(graph), k(kk) {
        if (limits.timeout) deadline = std::chrono::steady_clock::now() + *limits.timeout;
    }

    SearchLimits remaining_limits() const {
        SearchLimits l;
        if (deadline) {
            auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                *deadline - std::chrono::steady_clock::now());
            l.timeout = left.count() > 0 ? left : std::chrono::milliseconds(0);
        }
        return l;
    }

    bool expired() const {
        return deadline && std::chrono::steady_clock::now() > *deadline;
    }

    bool edgeless(Face mask) const {
        for (int v : face_indices(mask))
            if ((g.adjacency(v) & mask) != 0) return false;
        return true;
    }

    // Direct search on the induced subgraph; facets reported as root masks.
    SubResult direct(Face mask) {
        Graph sub = induced_subgraph(g, mask);
        Complex cx = independence_complex(sub);
        if (cx.facet_count() >= 2 && k > cx.dimension() + 1) return {SubStatus::reject, {}};
        SearchResult sr = find_k_shelling(cx, k, remaining_limits());
        if (sr.status == SearchStatus::undecided) return {SubStatus::undecided, {}};
        if (sr.status == SearchStatus::none) return {SubStatus::reject, {}};
        std::vector<int> global = face_indices(mask);
        SubResult out{SubStatus::accept, {}};
        for (int idx : sr.order->order) {
            Face local = cx.facets()[static_cast<std::size_t>(idx)];
            Face lifted = 0;
            for (int v : face_indices(local)) lifted |= face_bit(global[static_cast<std::size_t>(v)]);
            out.order.push_back(lifted);
        }
        return out;
    }

    // First k-simplicial set of the induced subgraph in lex order, if any,
    // together with its parts.
    std::optional<std::pair<Face, std::vector<Face>>> first_simplicial_set(Face mask) {
        std::vector<int> verts = face_indices(mask);
        int n = static_cast<int>(verts.size());
        if (k > n) return std::nullopt;
        std::vector<int> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            Face s = 0;
            for (int i : pick) s |= face_bit(verts[static_cast<std::size_t>(i)]);
            bool indep = true;
            for (int v : face_indices(s)) indep = indep && (g.adjacency(v) & mask & s) == 0;
            if (indep) {
                SimplicialSetResult r = simplicial_set_in_scope(g, mask, s, k);
                if (r.ok) return std::make_pair(s, std::move(r.parts));
            }
            int pos = k - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i) - 1] + 1;
        }
        return std::nullopt;
    }

    SubResult solve(Face mask) {
        auto hit = memo.find(mask);
        if (hit != memo.end()) return hit->second;
        if (expired()) return {SubStatus::undecided, {}};

        SubResult res;
        if (edgeless(mask)) {
            res = {SubStatus::accept, {mask}};  // one facet: all vertices
        } else if (auto found = first_simplicial_set(mask)) {
            res = solve_with_parts(mask, found->first, found->second);
        } else {
            res = direct(mask);
        }
        memo[mask] = res;
        return res;
    }

    SubResult solve_with_parts(Face mask, Face s, const std::vector<Face>& parts) {
        if (parts.size() == 1) {
            // Isolated twin class: every facet contains it, so the decision
            // reduces to the graph without it; a rejection there is settled
            // by the direct search instead.
            SubResult sub = solve(mask & ~s);
            if (sub.status == SubStatus::undecided) return sub;
            if (sub.status == SubStatus::accept) {
                SubResult out{SubStatus::accept, {}};
                for (Face h : sub.order) out.order.push_back(h | s);
                return out;
            }
            return direct(mask);
        }

        // Split on every part other than the simplicial set itself; all
        // pairs must accept.
        std::optional<SubResult> witness_gpp, witness_gp;
        Face split = 0;
        for (Face part : parts) {
            if (part == s) continue;
            Face nbhd = part;
            for (int v : face_indices(part)) nbhd |= g.adjacency(v) & mask;
            SubResult without_nbhd = solve(mask & ~nbhd);
            if (without_nbhd.status != SubStatus::accept) return without_nbhd;
            SubResult without_part = solve(mask & ~part);
            if (without_part.status != SubStatus::accept) return without_part;
            if (split == 0) {
                split = part;
                witness_gp = without_nbhd;
                witness_gpp = without_part;
            }
        }
        // Witness order: facets avoiding the split part first, then the
        // facets through it.
        SubResult out{SubStatus::accept, witness_gpp->order};
        for (Face h : witness_gp->order) out.order.push_back(h | split);
        return out;
    }
};

}  // namespace

SearchResult decide_k_shellable_graph(const Graph& g, int k, GraphStrategy strategy,
                                      const SearchLimits& limits) {
    if (k < 1) throw DomainError("k must be a positive integer");
    Complex cx = independence_complex(g);

    SearchResult res;
    if (strategy == GraphStrategy::direct) {
        if (cx.facet_count() >= 2 && k > cx.dimension() + 1) {
            res.status = SearchStatus::none;
            return res;
        }
        return find_k_shelling(cx, k, limits);
    }

    GraphDecider dec(g, k, limits);
    SubResult sub = dec.solve(g.full_mask());
    if (sub.status == SubStatus::undecided) {
        res.status = SearchStatus::undecided;
        return res;
    }
    if (sub.status == SubStatus::reject) {
        res.status = SearchStatus::none;
        return res;
    }

    // Convert the facet masks to indices and verify; any mismatch falls back
    // to the direct search.
    std::vector<int> order;
    bool consistent = sub.order.size() == cx.facets().size();
    for (Face f : sub.order) {
        if (!consistent) break;
        auto it = std::find(cx.facets().begin(), cx.facets().end(), f);
        if (it == cx.facets().end()) {
            consistent = false;
            break;
        }
        order.push_back(static_cast<int>(it - cx.facets().begin()));
    }
    if (consistent) {
        ShellingOrder candidate{k, order};
        if (verify_k_shelling(cx, candidate).accepted) {
            res.status = SearchStatus::found;
            res.order = candidate;
            return res;
        }
    }
    if (cx.facet_count() >= 2 && k > cx.dimension() + 1) {
        res.status = SearchStatus::none;
        return res;
    }
    return find_k_shelling(cx, k, limits);
}

}  // namespace kshell
