#include <turan/hypergraph.hpp>

#include <algorithm>
#include <set>

namespace turan {

bool Edge::has_repeats() const {
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] == entries[i - 1]) return true;
    return false;
}

std::vector<std::pair<Vertex, int>> Edge::multiplicities() const {
    std::vector<std::pair<Vertex, int>> out;
    for (Vertex v : entries) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

bool edge_less(const Edge& a, const Edge& b) {
    if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
    return a.entries < b.entries;
}

bool RGraph::has_loop_edges() const {
    for (const Edge& e : edges)
        if (e.has_repeats()) return true;
    return false;
}

void validate_graph(const RGraph& g) {
    if (g.n < 0) fail(ErrorKind::InvariantViolation, "negative vertex count");
    for (const Edge& e : g.edges) {
        if (e.entries.empty())
            fail(ErrorKind::InvariantViolation, "empty edge");
        if (!std::is_sorted(e.entries.begin(), e.entries.end()))
            fail(ErrorKind::InvariantViolation, "edge entries must be ascending");
        if (e.entries.front() < 1 || e.entries.back() > g.n)
            fail(ErrorKind::InvariantViolation, "edge mentions a vertex outside 1..n");
        if (!g.allows_loops && e.has_repeats())
            fail(ErrorKind::LoopsNotAllowed, "repeated vertex in an edge of a loop-free graph");
    }
    for (size_t i = 0; i + 1 < g.edges.size(); ++i) {
        if (!edge_less(g.edges[i], g.edges[i + 1])) {
            if (g.edges[i] == g.edges[i + 1])
                fail(ErrorKind::InvariantViolation, "duplicate edge");
            fail(ErrorKind::InvariantViolation, "edges not in canonical order");
        }
    }
}

RGraph make_graph(int n, const std::vector<std::vector<Vertex>>& edges, bool allows_loops) {
    RGraph g;
    g.n = n;
    g.allows_loops = allows_loops;
    g.edges.reserve(edges.size());
    for (const auto& raw : edges) {
        Edge e(raw);
        std::sort(e.entries.begin(), e.entries.end());
        g.edges.push_back(std::move(e));
    }
    std::sort(g.edges.begin(), g.edges.end(), edge_less);
    validate_graph(g);
    return g;
}

std::vector<int> edge_type_set(const RGraph& g) {
    std::set<int> r;
    for (const Edge& e : g.edges) r.insert(e.cardinality());
    return std::vector<int>(r.begin(), r.end());
}

RGraph level_graph(const RGraph& g, int r) {
    RGraph out;
    out.n = g.n;
    out.allows_loops = g.allows_loops;
    for (const Edge& e : g.edges)
        if (e.cardinality() == r) out.edges.push_back(e);
    return out;
}

RGraph complete(const std::vector<int>& types, int n) {
    RGraph g;
    g.n = n;
    for (int r : types) {
        if (r < 1) fail(ErrorKind::InvariantViolation, "edge cardinality must be positive");
        if (r > n) fail(ErrorKind::CardinalityExceedsN, "complete graph level exceeds vertex count");
        // Enumerate r-subsets of 1..n in lexicographic order.
        std::vector<Vertex> pick(r);
        for (int i = 0; i < r; ++i) pick[i] = i + 1;
        while (true) {
            g.edges.push_back(Edge(pick));
            int i = r - 1;
            while (i >= 0 && pick[i] == n - (r - 1 - i)) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), edge_less);
    validate_graph(g);
    return g;
}

Rat lubell(const RGraph& g, int n) {
    if (g.has_loop_edges())
        fail(ErrorKind::LoopsNotAllowed, "shorthand density is defined for simple graphs");
    if (n < g.n)
        fail(ErrorKind::CardinalityExceedsN, "ground set smaller than the graph");
    Rat total(0);
    for (const Edge& e : g.edges) {
        int r = e.cardinality();
        if (r > n)
            fail(ErrorKind::CardinalityExceedsN, "edge larger than the ground set");
        total += Rat(1, binomial(n, r));
    }
    return total;
}

RGraph relabel(const RGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        fail(ErrorKind::DomainMismatch, "relabeling must cover all vertices");
    std::vector<bool> seen(g.n, false);
    for (int v : perm) {
        if (v < 1 || v > g.n || seen[v - 1])
            fail(ErrorKind::DomainMismatch, "relabeling is not a permutation of 1..n");
        seen[v - 1] = true;
    }
    RGraph out;
    out.n = g.n;
    out.allows_loops = g.allows_loops;
    out.edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        Edge img;
        img.entries.reserve(e.entries.size());
        for (Vertex v : e.entries) img.entries.push_back(perm[v - 1]);
        std::sort(img.entries.begin(), img.entries.end());
        out.edges.push_back(std::move(img));
    }
    std::sort(out.edges.begin(), out.edges.end(), edge_less);
    validate_graph(out);
    return out;
}

int edge_degree(const RGraph& g, Vertex v) {
    int deg = 0;
    for (const Edge& e : g.edges)
        if (std::binary_search(e.entries.begin(), e.entries.end(), v)) ++deg;
    return deg;
}

} // namespace turan
