#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kshell/complex.hpp"
#include "kshell/expansion.hpp"
#include "kshell/shelling.hpp"

namespace kshell {

// Simple undirected graph on named vertices; adjacency kept as one bitset
// row per vertex. Loops are rejected, repeated edges collapse.
class Graph {
public:
    explicit Graph(Universe vertices);
    Graph(Universe vertices, const std::vector<std::pair<int, int>>& edges);

    const Universe& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }
    Face adjacency(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const { return face_contains(adj_.at(static_cast<std::size_t>(u)), v); }
    void add_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
    int edge_count() const;
    bool is_independent(Face s) const;
    Face full_mask() const { return vertices_.full_mask(); }

private:
    Universe vertices_;
    std::vector<Face> adj_;
};

// Union of open neighborhoods of U; the closed variant also includes U.
Face open_neighborhood(const Graph& g, Face u);
Face closed_neighborhood(const Graph& g, Face u);

// Subgraph on the vertex subset `keep` (labels preserved, indices re-packed).
Graph induced_subgraph(const Graph& g, Face keep);

// Independence complex: facets are the maximal independent sets, enumerated
// by pivoting Bron-Kerbosch on the complement and listed in lexicographic
// vertex order.
Complex independence_complex(const Graph& g);

// Quadratic squarefree ideal with one generator per edge.
MonomialIdeal edge_ideal(const Graph& g);

// Vertex duplication: vertex x becomes copies x_1..x_{alpha(x)}, copies of
// adjacent vertices are all adjacent, copies of one vertex never are.
Graph duplicate(const Graph& g, const ExpansionVector& alpha);

struct SimplicialSetResult {
    bool ok = false;
    std::vector<Face> parts;  // all parts, ascending lex; S is one of them when ok
    std::string reason;       // set when !ok
};

// S qualifies when S is independent, the graph induced on N[S] is complete
// multipartite with all parts of size exactly k (parts are the classes of
// non-adjacency), vertices inside a part are twins in G (equal open
// neighborhoods), and S itself is one of the parts. A single part (r = 1,
// an isolated twin class) counts as complete 1-partite.
SimplicialSetResult is_k_simplicial_set(const Graph& g, Face s, int k);

// All independent k-sets accepted by is_k_simplicial_set, in lex order.
std::vector<std::pair<Face, std::vector<Face>>> find_k_simplicial_sets(const Graph& g, int k);

enum class GraphStrategy { direct, recursive };

// Decides k-shellability of the independence complex. `direct` searches the
// complex; `recursive` splits on a k-simplicial set S_1 with parts S_1..S_r,
// recursing on G\N[S_i] and G\S_i for i = 2..r and assembling the witness
// order from the sub-orders (falling back to the direct search when no
// k-simplicial set exists, and as arbiter in the degenerate r = 1 case).
// k larger than dim+1 of a multi-facet complex decides "none" rather than
// erroring, so the recursion stays total.
SearchResult decide_k_shellable_graph(const Graph& g, int k, GraphStrategy strategy,
                                      const SearchLimits& limits = {});

}  // namespace kshell
