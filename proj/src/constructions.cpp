#include <turan/constructions.hpp>

#include <turan/error.hpp>
#include <turan/io.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace turan {

namespace {

void subsets_rec(const std::vector<int>& pool, int take, size_t from, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (take == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t i = from; i + static_cast<size_t>(take) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        subsets_rec(pool, take - 1, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(const std::vector<int>& pool, int take) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(pool, take, 0, cur, out);
    return out;
}

} // namespace

RGraph blow_up(const RGraph& g, const std::vector<int>& sizes) {
    validate_graph(g);
    if (sizes.size() != static_cast<size_t>(g.n)) {
        fail(ErrorKind::SpecMismatch, "expected " + std::to_string(g.n) +
                                          " part sizes, got " + std::to_string(sizes.size()));
    }
    for (int s : sizes) {
        if (s < 1) {
            fail(ErrorKind::SpecMismatch, "part sizes must be positive");
        }
    }
    std::vector<int> offset(static_cast<size_t>(g.n) + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        offset[static_cast<size_t>(v)] =
            offset[static_cast<size_t>(v) - 1] + sizes[static_cast<size_t>(v) - 1];
    }
    std::vector<std::vector<Vertex>> edges;
    for (const Edge& e : g.edges) {
        // One pick per vertex of the edge: that many distinct part members.
        std::vector<std::vector<std::vector<int>>> picks;
        for (const auto& [v, mult] : e.multiplicities()) {
            if (mult > sizes[static_cast<size_t>(v) - 1]) {
                fail(ErrorKind::MultiplicityExceedsPart,
                     "vertex " + std::to_string(v) + " appears " + std::to_string(mult) +
                         " times in an edge but its part only has " +
                         std::to_string(sizes[static_cast<size_t>(v) - 1]) + " vertices");
            }
            std::vector<int> part(static_cast<size_t>(sizes[static_cast<size_t>(v) - 1]));
            std::iota(part.begin(), part.end(), offset[static_cast<size_t>(v) - 1] + 1);
            picks.push_back(subsets(part, mult));
        }
        std::vector<size_t> odo(picks.size(), 0);
        bool exhausted = false;
        while (!exhausted) {
            std::vector<Vertex> entries;
            entries.reserve(e.entries.size());
            for (size_t i = 0; i < picks.size(); ++i) {
                const auto& pick = picks[i][odo[i]];
                entries.insert(entries.end(), pick.begin(), pick.end());
            }
            std::sort(entries.begin(), entries.end());
            edges.push_back(std::move(entries));
            exhausted = true;
            for (size_t i = picks.size(); i-- > 0;) {
                if (++odo[i] < picks[i].size()) {
                    exhausted = false;
                    break;
                }
                odo[i] = 0;
            }
        }
    }
    return make_graph(offset[static_cast<size_t>(g.n)], edges, false);
}

RGraph product(const RGraph& a, const RGraph& b) {
    validate_graph(a);
    validate_graph(b);
    std::set<std::vector<Vertex>> result;
    std::vector<int> shared;
    {
        auto ta = edge_type_set(a);
        auto tb = edge_type_set(b);
        std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                              std::back_inserter(shared));
    }
    for (int r : shared) {
        for (const Edge& ea : a.edges) {
            if (ea.cardinality() != r) {
                continue;
            }
            for (const Edge& eb : b.edges) {
                if (eb.cardinality() != r) {
                    continue;
                }
                std::vector<int> perm(static_cast<size_t>(r));
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<Vertex> entries(static_cast<size_t>(r));
                    for (int k = 0; k < r; ++k) {
                        int u = ea.entries[static_cast<size_t>(k)];
                        int v = eb.entries[static_cast<size_t>(perm[static_cast<size_t>(k)])];
                        entries[static_cast<size_t>(k)] = (u - 1) * b.n + v;
                    }
                    std::sort(entries.begin(), entries.end());
                    result.insert(std::move(entries));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    std::vector<std::vector<Vertex>> edges(result.begin(), result.end());
    bool loops = false;
    for (const auto& e : edges) {
        loops = loops || std::adjacent_find(e.begin(), e.end()) != e.end();
    }
    return make_graph(a.n * b.n, edges, loops);
}

RGraph suspension(const RGraph& g, int t) {
    validate_graph(g);
    if (g.has_loop_edges()) {
        fail(ErrorKind::LoopsNotAllowed, "suspension is defined for simple graphs");
    }
    if (t < 0) {
        fail(ErrorKind::InvariantViolation, "suspension count must be non-negative");
    }
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        std::vector<Vertex> entries = e.entries;
        for (int k = 1; k <= t; ++k) {
            entries.push_back(g.n + k);
        }
        edges.push_back(std::move(entries));
    }
    return make_graph(g.n + t, edges, g.allows_loops);
}

RGraph partial_suspension(const RGraph& g) {
    validate_graph(g);
    if (g.has_loop_edges()) {
        fail(ErrorKind::LoopsNotAllowed, "partial suspension is defined for simple graphs");
    }
    auto types = edge_type_set(g);
    if (types.size() != 2 || types[0] != 1 || types[1] < 2) {
        fail(ErrorKind::WrongEdgeTypes,
             "partial suspension needs cardinalities exactly {1, t} with t >= 2");
    }
    int t = types[1];
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        std::vector<Vertex> entries = e.entries;
        if (e.cardinality() == t) {
            entries.push_back(g.n + 1);
        }
        edges.push_back(std::move(entries));
    }
    return make_graph(g.n + 1, edges, g.allows_loops);
}

RGraph chain(const std::vector<int>& types) {
    if (types.empty()) {
        fail(ErrorKind::InvalidR, "the cardinality set must be non-empty");
    }
    for (size_t i = 0; i < types.size(); ++i) {
        if (types[i] < 1 || (i > 0 && types[i] <= types[i - 1])) {
            fail(ErrorKind::InvalidR,
                 "the cardinality set must be strictly increasing and positive");
        }
    }
    std::vector<std::vector<Vertex>> edges;
    for (int k : types) {
        std::vector<Vertex> prefix(static_cast<size_t>(k));
        std::iota(prefix.begin(), prefix.end(), 1);
        edges.push_back(std::move(prefix));
    }
    return make_graph(types.back(), edges, false);
}

namespace {

CatalogEntry entry(std::string name, const char* shorthand, bool loops,
                   std::optional<Root3> density, std::string note) {
    CatalogEntry ce;
    ce.name = std::move(name);
    ce.graph = graph_from_shorthand(shorthand, 0, loops);
    ce.known_density = std::move(density);
    ce.note = std::move(note);
    return ce;
}

std::vector<CatalogEntry> build_catalog() {
    const Root3 one(Rat(1));
    const Root3 d18(Rat(1), Rat(1, 18));  // 1 + sqrt(3)/18
    const Root3 d9(Rat(1), Rat(1, 9));    // 1 + sqrt(3)/9
    const Root3 d29(Rat(1), Rat(2, 9));   // 1 + 2*sqrt(3)/9
    const Root3 lamB(Rat(4, 9), Rat(1, 3)); // 4/9 + sqrt(3)/3
    const Root3 fourThirds(Rat(4, 3));

    std::vector<CatalogEntry> list;
    list.push_back(entry("C13", "1;123", false, one,
                         "the {1,3} chain: a marked vertex inside a triple; the blow-up "
                         "closure of chains carries every trivially degenerate graph"));
    list.push_back(entry("G4_b", "1;123;134;234", false, std::nullopt,
                         "one marked vertex on a tight 4-vertex triple cluster; forbidding it "
                         "together with K3_bb pins limiting density 1"));
    list.push_back(entry("H4_23", "12;13;234", false, one,
                         "smallest non-trivially degenerate {2,3}-graph; base case for "
                         "degenerate witnesses with consecutive cardinalities"));
    list.push_back(entry("H4_bb", "1;2;123;124;134", false, std::nullopt,
                         "two marked vertices over four triples; forbidding it together with "
                         "K3_bbb pins limiting density 1 + sqrt(3)/9"));
    list.push_back(entry("H4_bbb", "1;2;3;124;134;234", false, std::nullopt,
                         "three marked vertices over three triples; forbidding it together "
                         "with K3_bbb pins limiting density 1 + sqrt(3)/9"));
    list.push_back(entry("H5_13", "2;3;124;135;145", false, one,
                         "universal degenerate target: a {1,3}-graph has limiting density 1 "
                         "exactly when it maps into this graph"));
    list.push_back(entry("H5_star", "1;2;3;124;135;145", false, d9,
                         "H5_13 with every vertex of its triples' common vertex class marked; "
                         "limiting density 1 + sqrt(3)/9"));
    list.push_back(entry("H6_13", "1;2;3;124;135;145;236;246;356;456", false, std::nullopt,
                         "six-vertex case with all ten covering triples; conjectured limiting "
                         "density 4/3, currently only bracketed"));
    list.push_back(entry("H6_a", "1;2;3;124;135;145;236;246;356", false, std::nullopt,
                         "H6_13 minus one triple; limiting density open"));
    list.push_back(entry("H6_b", "1;2;3;124;135;145;236;246;456", false, std::nullopt,
                         "H6_13 minus one triple; conjectured limiting density 4/3"));
    list.push_back(entry("H6_c", "1;2;3;124;135;145;236;246", false, std::nullopt,
                         "H6_13 minus two triples; limiting density open"));
    list.push_back(entry("H6_d", "1;2;3;124;135;145;236;456", false, std::nullopt,
                         "H6_13 minus two triples; limiting density open"));
    list.push_back(entry("H6_e", "1;2;3;124;135;236;456", false, std::nullopt,
                         "H6_13 minus three triples; limiting density open"));
    list.push_back(entry("H6_star", "1;2;3;124;135;236", false, d9,
                         "three marked vertices, three disjointly-extended triples; limiting "
                         "density 1 + sqrt(3)/9"));
    list.push_back(entry("H_star", "1;2;3;124;356;456", false, d9,
                         "three marked vertices over a mixed triple cluster; limiting density "
                         "1 + sqrt(3)/9"));
    list.push_back(entry("K3_bb", "1;2;123", false, d18,
                         "a triple with two of its vertices marked; the smallest "
                         "non-degenerate {1,3}-graph, limiting density 1 + sqrt(3)/18"));
    list.push_back(entry("K3_bbb", "1;2;3;123", false, d29,
                         "a triple with all three vertices marked; limiting density "
                         "1 + 2*sqrt(3)/9"));

    list.push_back(entry("HA", "1;122;222", true, d18,
                         "two-class weight pattern whose blow-ups avoid K3_bb; simplex "
                         "optimum 1 + sqrt(3)/18 at x1 = 1/2 - sqrt(3)/6"));
    list.push_back(entry("HB", "1;2;123", true, lamB,
                         "K3_bb read as a weight pattern; simplex optimum 4/9 + sqrt(3)/3 at "
                         "x1 = x2 = (1 + sqrt(3))/6"));
    list.push_back(entry("HC", "1;112;122;222", true, d29,
                         "two-class weight pattern whose blow-ups avoid K3_bbb; simplex "
                         "optimum 1 + 2*sqrt(3)/9 at x1 = sqrt(3)/3"));
    list.push_back(entry("HD", "1;112;122", true, fourThirds,
                         "two-class weight pattern giving the 4/3 floor for H6_13; simplex "
                         "optimum 4/3 at x1 = 2/3"));
    list.push_back(entry("HE", "1;112;222", true, d9,
                         "two-class weight pattern for the 1 + sqrt(3)/9 family; simplex "
                         "optimum at x1 = (3 + sqrt(3))/6"));
    list.push_back(entry("HF", "1;2;123;133;233;333", true, d9,
                         "three-class weight pattern for the 1 + sqrt(3)/9 family; simplex "
                         "optimum at x1 = x2 = (3 - sqrt(3))/6"));
    return list;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& ce : catalog()) {
        if (ce.name == name) {
            return ce;
        }
    }
    std::string names;
    for (const CatalogEntry& ce : catalog()) {
        names += names.empty() ? "" : ", ";
        names += ce.name;
    }
    fail(ErrorKind::UnknownName, "no catalog entry named '" + name + "' (known: " + names + ")");
}

} // namespace turan
