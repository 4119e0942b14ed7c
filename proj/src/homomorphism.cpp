#include <turan/homomorphism.hpp>

#include <turan/error.hpp>
#include <turan/io.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace turan {

const char* to_string(HomFlavor flavor) {
    switch (flavor) {
    case HomFlavor::Lax: return "lax";
    case HomFlavor::EdgeInjective: return "edge-injective";
    case HomFlavor::Multiset: return "multiset";
    }
    return "?";
}

bool VertexMap::is_injective() const {
    std::vector<int> seen;
    seen.reserve(assignment.size());
    for (int image : assignment) {
        seen.push_back(image);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

using EdgeKey = std::vector<int>;

std::set<EdgeKey> edge_lookup(const RGraph& g) {
    std::set<EdgeKey> keys;
    for (const Edge& e : g.edges) {
        keys.insert(e.entries);
    }
    return keys;
}

// Image of one source edge under a total (or edge-covering partial) map,
// reduced according to the flavor. Returns false when the edge condition
// fails outright (only possible for EdgeInjective, where a repeated image
// kills the edge before any lookup).
bool edge_image(const Edge& e, const std::vector<int>& assignment, HomFlavor flavor,
                EdgeKey& out) {
    out.clear();
    out.reserve(e.entries.size());
    for (int v : e.entries) {
        out.push_back(assignment[v - 1]);
    }
    std::sort(out.begin(), out.end());
    switch (flavor) {
    case HomFlavor::Lax:
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return true;
    case HomFlavor::EdgeInjective:
        return std::adjacent_find(out.begin(), out.end()) == out.end();
    case HomFlavor::Multiset:
        return true;
    }
    return false;
}

struct SearchPlan {
    std::vector<int> order;                    // source vertices, search order
    std::vector<std::vector<int>> ready_edges; // edge ids fully assigned at step k
};

SearchPlan plan_search(const RGraph& source) {
    SearchPlan plan;
    plan.order.resize(static_cast<size_t>(source.n));
    std::iota(plan.order.begin(), plan.order.end(), 1);
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
        return edge_degree(source, a) > edge_degree(source, b);
    });
    std::vector<int> step_of(static_cast<size_t>(source.n) + 1, 0);
    for (size_t k = 0; k < plan.order.size(); ++k) {
        step_of[static_cast<size_t>(plan.order[k])] = static_cast<int>(k);
    }
    plan.ready_edges.resize(plan.order.size());
    for (size_t i = 0; i < source.edges.size(); ++i) {
        int last = 0;
        for (int v : source.edges[i].entries) {
            last = std::max(last, step_of[static_cast<size_t>(v)]);
        }
        plan.ready_edges[static_cast<size_t>(last)].push_back(static_cast<int>(i));
    }
    return plan;
}

bool search(const RGraph& source, const RGraph& target, const std::set<EdgeKey>& targets,
            HomFlavor flavor, bool injective, const SearchPlan& plan, size_t step,
            std::vector<int>& assignment, std::vector<char>& used) {
    if (step == plan.order.size()) {
        return true;
    }
    int v = plan.order[step];
    EdgeKey image;
    for (int t = 1; t <= target.n; ++t) {
        if (injective && used[static_cast<size_t>(t)]) {
            continue;
        }
        assignment[static_cast<size_t>(v) - 1] = t;
        bool ok = true;
        for (int edge_id : plan.ready_edges[step]) {
            if (!edge_image(source.edges[static_cast<size_t>(edge_id)], assignment, flavor,
                            image) ||
                targets.find(image) == targets.end()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            used[static_cast<size_t>(t)] = 1;
            if (search(source, target, targets, flavor, injective, plan, step + 1, assignment,
                       used)) {
                return true;
            }
            used[static_cast<size_t>(t)] = 0;
        }
    }
    assignment[static_cast<size_t>(v) - 1] = 0;
    return false;
}

std::optional<VertexMap> run_search(const RGraph& source, const RGraph& target,
                                    HomFlavor flavor, bool injective) {
    if (injective && source.n > target.n) {
        return std::nullopt;
    }
    const auto targets = edge_lookup(target);
    // A source edge wider than every target edge can never land; cheap veto.
    if (!source.edges.empty() && !target.edges.empty() && flavor != HomFlavor::Lax) {
        int max_target = 0;
        for (const Edge& e : target.edges) {
            max_target = std::max(max_target, e.cardinality());
        }
        for (const Edge& e : source.edges) {
            if (e.cardinality() > max_target) {
                return std::nullopt;
            }
        }
    }
    if (!source.edges.empty() && target.edges.empty()) {
        return std::nullopt;
    }
    SearchPlan plan = plan_search(source);
    std::vector<int> assignment(static_cast<size_t>(source.n), 0);
    std::vector<char> used(static_cast<size_t>(target.n) + 1, 0);
    if (!search(source, target, targets, flavor, injective, plan, 0, assignment, used)) {
        return std::nullopt;
    }
    VertexMap map;
    map.source_n = source.n;
    map.target_n = target.n;
    map.assignment = std::move(assignment);
    map.flavor = flavor;
    return map;
}

} // namespace

std::optional<VertexMap> find_homomorphism(const RGraph& source, const RGraph& target,
                                           HomFlavor flavor) {
    validate_graph(source);
    validate_graph(target);
    if (flavor != HomFlavor::Multiset && target.has_loop_edges()) {
        fail(ErrorKind::LoopsNotAllowed,
             "loop edges in the target require the multiset flavor");
    }
    return run_search(source, target, flavor, /*injective=*/false);
}

bool verify_map(const RGraph& source, const RGraph& target, const VertexMap& map) {
    if (map.source_n != source.n || map.target_n != target.n) {
        fail(ErrorKind::DomainMismatch, "map endpoints do not match the given graphs");
    }
    if (map.assignment.size() != static_cast<size_t>(source.n)) {
        fail(ErrorKind::DomainMismatch, "map must assign every source vertex");
    }
    for (int image : map.assignment) {
        if (image < 1 || image > target.n) {
            fail(ErrorKind::DomainMismatch, "image vertex out of range");
        }
    }
    const auto targets = edge_lookup(target);
    EdgeKey image;
    for (const Edge& e : source.edges) {
        if (!edge_image(e, map.assignment, map.flavor, image) ||
            targets.find(image) == targets.end()) {
            return false;
        }
    }
    return true;
}

std::optional<VertexMap> blowup_colorable(const RGraph& source, const RGraph& pattern) {
    validate_graph(source);
    validate_graph(pattern);
    return run_search(source, pattern, HomFlavor::Multiset, /*injective=*/false);
}

std::optional<VertexMap> contains_subgraph(const RGraph& host, const RGraph& sub) {
    validate_graph(host);
    validate_graph(sub);
    auto map = run_search(sub, host, HomFlavor::Multiset, /*injective=*/true);
    if (map) {
        map->flavor = HomFlavor::EdgeInjective;
    }
    return map;
}

namespace {

// Iterated neighborhood refinement: vertices get class ids that only
// isomorphisms can permute. Classes are ordered by their signature, so the
// class order itself is label-independent.
std::vector<std::vector<int>> refinement_classes(const RGraph& g) {
    std::vector<int> color(static_cast<size_t>(g.n), 0);
    int distinct = 1;
    for (int round = 0; round < g.n; ++round) {
        // Signature of v: current color plus, for every incident edge, the
        // edge's cardinality, v's multiplicity in it, and the sorted colors
        // of the other entries.
        std::vector<std::vector<int>> sig(static_cast<size_t>(g.n));
        for (int v = 1; v <= g.n; ++v) {
            std::vector<std::vector<int>> local;
            for (const Edge& e : g.edges) {
                int mult = 0;
                std::vector<int> others;
                for (int u : e.entries) {
                    if (u == v) {
                        ++mult;
                    } else {
                        others.push_back(color[static_cast<size_t>(u) - 1]);
                    }
                }
                if (mult == 0) {
                    continue;
                }
                std::sort(others.begin(), others.end());
                std::vector<int> item{e.cardinality(), mult};
                item.insert(item.end(), others.begin(), others.end());
                local.push_back(std::move(item));
            }
            std::sort(local.begin(), local.end());
            std::vector<int> flat{color[static_cast<size_t>(v) - 1]};
            for (const auto& item : local) {
                flat.push_back(-1);
                flat.insert(flat.end(), item.begin(), item.end());
            }
            sig[static_cast<size_t>(v) - 1] = std::move(flat);
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sig) {
            ids.emplace(s, 0);
        }
        int next = 0;
        for (auto& [key, id] : ids) {
            id = next++;
        }
        std::vector<int> fresh(static_cast<size_t>(g.n));
        for (int v = 1; v <= g.n; ++v) {
            fresh[static_cast<size_t>(v) - 1] = ids[sig[static_cast<size_t>(v) - 1]];
        }
        bool stable = static_cast<int>(ids.size()) == distinct;
        distinct = static_cast<int>(ids.size());
        color = std::move(fresh);
        if (stable) {
            break;
        }
    }
    std::vector<std::vector<int>> classes(static_cast<size_t>(distinct));
    for (int v = 1; v <= g.n; ++v) {
        classes[static_cast<size_t>(color[static_cast<size_t>(v) - 1])].push_back(v);
    }
    return classes;
}

std::vector<std::vector<int>> relabeled_edges(const RGraph& g, const std::vector<int>& label) {
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        std::vector<int> entries;
        entries.reserve(e.entries.size());
        for (int v : e.entries) {
            entries.push_back(label[static_cast<size_t>(v) - 1]);
        }
        std::sort(entries.begin(), entries.end());
        edges.push_back(std::move(entries));
    }
    std::sort(edges.begin(), edges.end(), [](const std::vector<int>& a,
                                             const std::vector<int>& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return edges;
}

} // namespace

std::string canonical_form(const RGraph& g, int max_n) {
    validate_graph(g);
    if (g.n > max_n) {
        fail(ErrorKind::TooLarge, "canonical form supports at most " + std::to_string(max_n) +
                                      " vertices, got " + std::to_string(g.n));
    }
    auto classes = refinement_classes(g);
    // New labels are blocked by class: class 0 owns labels 1..|c0|, and so
    // on. Within each class every assignment order is tried; across classes
    // the refinement already fixed the order.
    std::vector<int> base(static_cast<size_t>(g.n) + 1, 0);
    {
        int next = 1;
        for (auto& cls : classes) {
            std::sort(cls.begin(), cls.end());
            for (size_t i = 0; i < cls.size(); ++i) {
                base[static_cast<size_t>(cls[i])] = next + static_cast<int>(i);
            }
            next += static_cast<int>(cls.size());
        }
    }
    std::vector<std::vector<int>> best;
    std::vector<int> label(static_cast<size_t>(g.n));
    while (true) {
        for (int v = 1; v <= g.n; ++v) {
            label[static_cast<size_t>(v) - 1] = base[static_cast<size_t>(v)];
        }
        auto candidate = relabeled_edges(g, label);
        if (best.empty() || candidate < best) {
            best = std::move(candidate);
        }
        // Advance the per-class permutation odometer (last class fastest).
        bool advanced = false;
        for (size_t c = classes.size(); c-- > 0;) {
            auto& cls = classes[c];
            // Permuting which member of the class receives which of the
            // class's labels == permuting the label slice.
            std::vector<int> slice;
            slice.reserve(cls.size());
            for (int v : cls) {
                slice.push_back(base[static_cast<size_t>(v)]);
            }
            if (std::next_permutation(slice.begin(), slice.end())) {
                for (size_t i = 0; i < cls.size(); ++i) {
                    base[static_cast<size_t>(cls[i])] = slice[i];
                }
                advanced = true;
                break;
            }
            std::sort(slice.begin(), slice.end());
            for (size_t i = 0; i < cls.size(); ++i) {
                base[static_cast<size_t>(cls[i])] = slice[i];
            }
        }
        if (!advanced) {
            break;
        }
    }
    std::vector<std::vector<Vertex>> edges(best.begin(), best.end());
    RGraph canon = make_graph(g.n, edges, g.has_loop_edges());
    return serialize_graph(canon);
}

bool isomorphic(const RGraph& a, const RGraph& b, int max_n) {
    if (a.n != b.n || a.edges.size() != b.edges.size() ||
        a.has_loop_edges() != b.has_loop_edges()) {
        return false;
    }
    auto profile = [](const RGraph& g) {
        std::map<int, int> counts;
        for (const Edge& e : g.edges) {
            ++counts[e.cardinality()];
        }
        std::vector<int> degrees;
        for (int v = 1; v <= g.n; ++v) {
            degrees.push_back(edge_degree(g, v));
        }
        std::sort(degrees.begin(), degrees.end());
        return std::make_pair(counts, degrees);
    };
    if (profile(a) != profile(b)) {
        return false;
    }
    return canonical_form(a, max_n) == canonical_form(b, max_n);
}

} // namespace turan
