#pragma once

#include <turan/algebraic.hpp>
#include <turan/hypergraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turan {

/// Replace vertex i by a part of sizes[i-1] fresh vertices (parts are laid
/// out consecutively: vertex 1's part first). Every edge expands into all
/// ways of picking, for each vertex it contains, as many distinct part
/// members as its multiplicity there. The result is always simple.
/// sizes must list one positive count per vertex (SpecMismatch), and a
/// vertex of multiplicity m in some edge needs a part of size at least m
/// (MultiplicityExceedsPart).
RGraph blow_up(const RGraph& g, const std::vector<int>& sizes);

/// Product on the vertex set V(a) x V(b), with (i, j) encoded as
/// (i-1)*b.n + j. For every cardinality both graphs share, each pair of
/// edges contributes the pairings of their entries under every alignment;
/// duplicate result edges are kept once. Pairing repeated entries can
/// repeat a pair, so the result may carry loop edges even when the factors
/// are simple; the loops flag reflects what is actually present.
RGraph product(const RGraph& a, const RGraph& b);

/// Add t fresh vertices to the graph and to every edge (so every
/// cardinality grows by t). t must be non-negative and g simple.
RGraph suspension(const RGraph& g, int t = 1);

/// For a graph whose cardinalities are exactly {1, t} with t >= 2: add one
/// fresh vertex to every t-edge and leave the 1-edges alone, giving
/// cardinalities {1, t+1}. Anything else raises WrongEdgeTypes.
RGraph partial_suspension(const RGraph& g);

/// The graph on max(types) vertices whose edges are the prefixes
/// {1..k} for each k in types. types must be non-empty, strictly
/// increasing, and positive (InvalidR).
RGraph chain(const std::vector<int>& types);

struct CatalogEntry {
    std::string name;
    RGraph graph;
    /// For the small named graphs: the limiting edge density their family
    /// pins down, when a closed form is established. For the loop-edge
    /// patterns: the simplex optimum of the weight polynomial, which is the
    /// limiting density of the pattern's blow-up family.
    std::optional<Root3> known_density;
    std::string note;
};

/// All named graphs and patterns, in a fixed order (simple graphs first,
/// then loop-edge patterns, alphabetically within each group).
const std::vector<CatalogEntry>& catalog();

/// Lookup by name; raises UnknownName listing the valid names.
const CatalogEntry& catalog_entry(const std::string& name);

} // namespace turan
