#pragma once

#include <turan/algebraic.hpp>
#include <turan/homomorphism.hpp>
#include <turan/hypergraph.hpp>
#include <turan/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turan {

/// A finite set of forbidden simple graphs together with the edge
/// cardinalities hosts are allowed to use.
struct ForbiddenFamily {
    std::vector<RGraph> members;
    std::vector<int> types; // ascending; every member's cardinalities lie inside
};

/// types defaults to the union of the members' cardinality sets. An
/// explicit superset widens the host universe.
ForbiddenFamily make_family(std::vector<RGraph> members, std::vector<int> types = {});

struct ExtremalResult {
    int n = 0;
    Rat value;
    RGraph witness;
    long long configurations_explored = 0;
    bool lower_bound_only = false; // true for heuristic results
};

/// The exact maximum edge density over hosts on n labeled vertices avoiding
/// every family member, by branch-and-bound over (black set size) x (edge
/// subsets) with conflict tables, optimistic-completion pruning, and
/// label-symmetry reduction of the black set. Guaranteed-exact mode is
/// gated to types inside {1,3} and n <= 6 (UnsupportedTypes / TooLarge);
/// the witness is re-verified member-free by the independent containment
/// searcher before returning.
ExtremalResult exact_pi_n(const ForbiddenFamily& family, int n);

/// Same engine without the {1,3} gate, for small instances of any type set
/// (still capped by the 63-candidate conflict table: TooLarge).
ExtremalResult search_max_density(const ForbiddenFamily& family, int n);

/// Unpruned oracle: every black subset and every edge subset is built and
/// checked with contains_subgraph, no shared reasoning with the
/// branch-and-bound. Raises BudgetExceeded when the full configuration
/// count exceeds budget.
ExtremalResult max_density_enumerate(const ForbiddenFamily& family, int n,
                                     long long budget = 100'000'000);

/// Stochastic lower bound: greedy maximal fills over shuffled edge orders
/// for every black count, plus remove-one re-fill passes, within a budget
/// of freeness checks. Deterministic for a fixed seed. The result is
/// flagged lower_bound_only; types must lie inside {1,3}.
ExtremalResult heuristic_pi_n(const ForbiddenFamily& family, int n,
                              long long budget = 1'000'000,
                              unsigned long long seed = 1);

struct PatternBound {
    Root3 value;
    std::string pattern;
};

/// If g embeds into no blow-up of the named catalog pattern, the pattern's
/// certified simplex optimum is a lower bound for g's limiting density.
/// Returns nothing when g is colorable into the pattern. The name must be
/// a catalog entry with a stored optimum (UnknownName / InvariantViolation).
std::optional<PatternBound> lower_bound_via_pattern(const RGraph& g,
                                                    const std::string& pattern_name);

/// Best lower bound over all loop-edge catalog patterns, floored at 1.
Root3 best_pattern_lower_bound(const RGraph& g, std::vector<PatternBound>* found = nullptr);

struct ColoringBound {
    Root3 value;
    std::string target; // catalog name, or "A+B" for a paired test
    std::vector<std::pair<std::string, VertexMap>> colorings;
    std::optional<VertexMap> containment; // present when the test needs it
};

/// Scan the catalog targets with certified limiting densities in ascending
/// order of bound and return the first whose test succeeds: plain
/// colorability for H5_13, K3_bb, H5_star, H6_star; colorability into both
/// halves for the pairs {K3_bbb, H4_bb} and {K3_bbb, H4_bbb}; colorability
/// plus containment for K3_bbb. Nothing when every test fails.
std::optional<ColoringBound> upper_bound_via_coloring(const RGraph& g);

struct DegeneracyResult {
    bool degenerate = false;
    std::optional<VertexMap> witness; // coloring into H5_13 when degenerate
};

/// Decides whether a graph with cardinalities inside {1,3} has the least
/// possible limiting density in the {1,3} universe.
DegeneracyResult is_degenerate_13(const RGraph& g);

struct Evidence {
    std::string rule;
    std::string detail;   // target or pattern name
    std::optional<VertexMap> map;
};

struct PiClassification {
    enum class Kind { Exact, Interval, UnknownWithBounds };
    Kind kind = Kind::Interval;
    Root3 value;          // when Exact
    Root3 lower, upper;   // otherwise; UnknownWithBounds means both are the
                          // trivial universe bounds with no evidence at all
    std::vector<Evidence> evidence;
    std::string conjecture_note; // non-empty only for the recorded conjectures
};

/// Decision list for the limiting density of a {1,3}-graph (cardinalities
/// inside {1,3}; the answer is relative to the {1,3} universe, so the
/// fallback interval is [1, 2]).
PiClassification classify_pi_13(const RGraph& g);

/// A graph with cardinality set exactly R that has the least possible
/// limiting density without embedding into any blow-up of chain(R).
/// InvalidR for |R| < 2 or R = {1,2}, where no such graph exists.
RGraph nontrivial_degenerate_witness(const std::vector<int>& R);

} // namespace turan
