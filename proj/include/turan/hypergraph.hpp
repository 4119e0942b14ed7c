#pragma once

#include <turan/error.hpp>
#include <turan/rational.hpp>

#include <string>
#include <vector>

namespace turan {

/// Vertices are 1..n. Isolated vertices are legal: a vertex exists because
/// n says so, not because an edge mentions it.
using Vertex = int;

/// An edge is a multiset of vertices, stored as an ascending list with
/// repeats encoding loop multiplicity ({2,2,2} is a triple loop at 2).
struct Edge {
    std::vector<Vertex> entries;

    Edge() = default;
    explicit Edge(std::vector<Vertex> e) : entries(std::move(e)) {}

    int cardinality() const { return static_cast<int>(entries.size()); }
    bool has_repeats() const;

    /// Support vertices paired with their multiplicities, ascending.
    std::vector<std::pair<Vertex, int>> multiplicities() const;

    friend bool operator==(const Edge& a, const Edge& b) { return a.entries == b.entries; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
};

/// Canonical edge order: by cardinality first, then lexicographic on the
/// ascending entry lists. All stored edge lists use this order.
bool edge_less(const Edge& a, const Edge& b);

/// Finite hypergraph whose edges may have mixed cardinalities. Loop edges
/// (repeated vertices) are only legal when allows_loops is set; equality is
/// literal (same n, same edge list, same flag) — isomorphism is a separate
/// question answered by canonical forms.
struct RGraph {
    int n = 0;
    std::vector<Edge> edges;
    bool allows_loops = false;

    bool has_loop_edges() const;

    friend bool operator==(const RGraph& a, const RGraph& b) {
        return a.n == b.n && a.allows_loops == b.allows_loops && a.edges == b.edges;
    }
    friend bool operator!=(const RGraph& a, const RGraph& b) { return !(a == b); }
};

/// Build a graph from raw vertex lists: sorts each edge, sorts and
/// deduplicates nothing silently — duplicate edges, out-of-range vertices,
/// and undeclared loops all raise InvariantViolation-family errors.
RGraph make_graph(int n, const std::vector<std::vector<Vertex>>& edges, bool allows_loops = false);

/// Validate an already-populated RGraph (range, ordering, duplicates, loop
/// flag). Used by every constructor path; raises on violation.
void validate_graph(const RGraph& g);

/// The set of edge cardinalities R(G), ascending.
std::vector<int> edge_type_set(const RGraph& g);

/// Subgraph keeping exactly the cardinality-r edges (same vertex set).
RGraph level_graph(const RGraph& g, int r);

/// Complete R-graph on n vertices: every r-subset for every r in R.
RGraph complete(const std::vector<int>& types, int n);

/// Shorthand density of g inside an n-vertex ground set: each r-edge
/// contributes 1/C(n,r). Exact. Requires n >= g.n, simple g.
Rat lubell(const RGraph& g, int n);

/// Apply the relabeling perm (1-based, perm[v-1] = new id of v).
RGraph relabel(const RGraph& g, const std::vector<int>& perm);

/// Number of edges containing v (loop edges count once per edge).
int edge_degree(const RGraph& g, Vertex v);

} // namespace turan
