#pragma once

#include <turan/hypergraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turan {

/// How an edge must land on the target:
///  - Lax: the image *set* of the edge is an edge of the target.
///  - EdgeInjective: the map is injective on each edge and the image set is
///    an edge (the default notion everywhere in this project).
///  - Multiset: the image counted with multiplicity equals a target edge;
///    this is exactly embeddability into some blow-up of the target, so it
///    is the flavor that may meet loop edges.
enum class HomFlavor { Lax, EdgeInjective, Multiset };

const char* to_string(HomFlavor flavor);

struct VertexMap {
    int source_n = 0;
    int target_n = 0;
    std::vector<int> assignment; // assignment[v-1] = image of vertex v
    HomFlavor flavor = HomFlavor::EdgeInjective;

    bool is_injective() const;
};

/// Search for a homomorphism source -> target under the given flavor.
/// Deterministic: source vertices are processed by descending edge-degree
/// (ties by ascending id) and target vertices are tried in ascending order,
/// so the returned witness is a pure function of the inputs. Returns
/// nothing only after exhausting the search space.
std::optional<VertexMap> find_homomorphism(const RGraph& source, const RGraph& target,
                                           HomFlavor flavor = HomFlavor::EdgeInjective);

/// Check a concrete map edge-by-edge. Shape errors (wrong sizes, images out
/// of range) raise DomainMismatch; a structurally valid map that misses an
/// edge condition just returns false.
bool verify_map(const RGraph& source, const RGraph& target, const VertexMap& map);

/// Is source contained in some blow-up of pattern? Equivalent to a
/// multiset-flavor homomorphism, which is how it is decided.
std::optional<VertexMap> blowup_colorable(const RGraph& source, const RGraph& pattern);

/// Injective embedding of sub into host with every edge of sub landing on
/// an edge of host. The witness maps V(sub) -> V(host).
std::optional<VertexMap> contains_subgraph(const RGraph& host, const RGraph& sub);

/// Label-independent serialization: the lexicographically least canonical
/// document over all relabelings (restricted to refinement-compatible ones;
/// the loops flag is normalized to "loop edges actually present" first).
/// Two graphs are isomorphic iff their canonical forms are equal bytewise.
/// Raises TooLarge above max_n vertices.
std::string canonical_form(const RGraph& g, int max_n = 10);

/// Canonical-form equality with cheap invariant pre-checks.
bool isomorphic(const RGraph& a, const RGraph& b, int max_n = 10);

} // namespace turan
