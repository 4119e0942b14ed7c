#include <doctest.h>

#include <turan/constructions.hpp>
#include <turan/extremal.hpp>
#include <turan/homomorphism.hpp>
#include <turan/hypergraph.hpp>
#include <turan/io.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace turan;
using test_util::raises;

namespace {

const RGraph& cat(const std::string& name) { return catalog_entry(name).graph; }

ForbiddenFamily family_of(std::initializer_list<const char*> names) {
    std::vector<RGraph> members;
    for (const char* name : names) {
        members.push_back(cat(name));
    }
    return make_family(std::move(members));
}

// A witness only counts when an independent checker agrees it is free and
// its density is what the search reported.
void check_witness(const ExtremalResult& result, const ForbiddenFamily& family) {
    CHECK(lubell(result.witness, result.n) == result.value);
    for (const RGraph& member : family.members) {
        CHECK_FALSE(contains_subgraph(result.witness, member).has_value());
    }
}

std::vector<std::string> pattern_names(const std::vector<PatternBound>& bounds) {
    std::vector<std::string> names;
    for (const PatternBound& b : bounds) {
        names.push_back(b.pattern);
    }
    return names;
}

} // namespace

TEST_CASE("assembling forbidden families") {
    ForbiddenFamily f = make_family({cat("K3_bb")});
    CHECK(f.types == std::vector<int>{1, 3});
    CHECK(f.members.size() == 1);

    // An explicit superset widens the host universe.
    ForbiddenFamily wide = make_family({cat("C13")}, {1, 2, 3});
    CHECK(wide.types == std::vector<int>{1, 2, 3});

    CHECK(raises([] { make_family({cat("K3_bb")}, {3}); }, ErrorKind::SpecMismatch));
    CHECK(raises([] { make_family({}); }, ErrorKind::SpecMismatch));
    CHECK(raises([] { make_family({cat("HA")}); }, ErrorKind::LoopsNotAllowed));
    CHECK(raises([] { make_family({cat("C13")}, {0, 1, 3}); }, ErrorKind::SpecMismatch));
}

TEST_CASE("exact densities at small n") {
    ForbiddenFamily chain13 = family_of({"C13"});
    for (int n = 3; n <= 6; ++n) {
        ExtremalResult r = exact_pi_n(chain13, n);
        CHECK(r.value == Rat(1));
        CHECK(r.n == n);
        check_witness(r, chain13);
    }

    ForbiddenFamily k3bb = family_of({"K3_bb"});
    ExtremalResult p3 = exact_pi_n(k3bb, 3);
    CHECK(p3.value == Rat(4, 3));
    CHECK(serialize_graph(p3.witness) == R"({"n":3,"edges":[[1],[1,2,3]]})");
    CHECK(p3.configurations_explored > 0);
    CHECK(exact_pi_n(k3bb, 4).value == Rat(5, 4));
    ExtremalResult p5 = exact_pi_n(k3bb, 5);
    CHECK(p5.value == Rat(6, 5));
    check_witness(p5, k3bb);
    CHECK(exact_pi_n(k3bb, 6).value == Rat(7, 6));

    CHECK(exact_pi_n(family_of({"K3_bbb"}), 5).value == Rat(3, 2));

    ForbiddenFamily pair = family_of({"K3_bb", "G4_b"});
    ExtremalResult pair5 = exact_pi_n(pair, 5);
    CHECK(pair5.value == Rat(1));
    check_witness(pair5, pair);

    // Re-running the search changes nothing.
    ExtremalResult again = exact_pi_n(k3bb, 5);
    CHECK(again.value == p5.value);
    CHECK(serialize_graph(again.witness) == serialize_graph(p5.witness));
}

TEST_CASE("search modes agree with the unpruned oracle") {
    const std::vector<ForbiddenFamily> families = {
        family_of({"C13"}), family_of({"K3_bb"}), family_of({"K3_bbb"}),
        family_of({"G4_b"}), family_of({"K3_bb", "G4_b"})};
    for (const ForbiddenFamily& family : families) {
        for (int n = 1; n <= 4; ++n) {
            CHECK(exact_pi_n(family, n).value == max_density_enumerate(family, n).value);
        }
    }

    // The ungated searcher handles the {1,4} family the partial suspension
    // produces, and matches full enumeration there.
    ForbiddenFamily lifted = make_family({partial_suspension(cat("C13"))});
    CHECK(lifted.types == std::vector<int>{1, 4});
    for (int n = 4; n <= 5; ++n) {
        CHECK(search_max_density(lifted, n).value ==
              max_density_enumerate(lifted, n).value);
    }
    CHECK(search_max_density(lifted, 5).value == Rat(1));
}

TEST_CASE("stochastic lower bounds") {
    ForbiddenFamily k3bb = family_of({"K3_bb"});
    ExtremalResult h5 = heuristic_pi_n(k3bb, 5);
    CHECK(h5.value == Rat(6, 5)); // the greedy fill reaches the true optimum here
    CHECK(h5.lower_bound_only);
    check_witness(h5, k3bb);

    // Same seed, same answer; and never above the exact value.
    ExtremalResult again = heuristic_pi_n(k3bb, 5);
    CHECK(again.value == h5.value);
    CHECK(serialize_graph(again.witness) == serialize_graph(h5.witness));
    CHECK(heuristic_pi_n(k3bb, 4).value <= exact_pi_n(k3bb, 4).value);

    // No budget: the empty host is still a sound (trivial) lower bound.
    ExtremalResult broke = heuristic_pi_n(k3bb, 5, 0);
    CHECK(broke.value == Rat(0));
    CHECK(broke.witness.n == 5);
    CHECK(broke.witness.edges.empty());
    CHECK(broke.lower_bound_only);
    CHECK(broke.configurations_explored == 0);

    CHECK(raises([] { heuristic_pi_n(make_family({partial_suspension(cat("C13"))}), 5); },
                 ErrorKind::UnsupportedTypes));
}

TEST_CASE("engine guardrails") {
    CHECK(raises([] { exact_pi_n(family_of({"C13"}), 7); }, ErrorKind::TooLarge));
    CHECK(raises([] { exact_pi_n(family_of({"C13"}), 0); }, ErrorKind::SpecMismatch));
    CHECK(raises([] { exact_pi_n(make_family({cat("H4_23")}), 4); },
                 ErrorKind::UnsupportedTypes));
    CHECK(raises([] { max_density_enumerate(family_of({"K3_bb"}), 6, 1000); },
                 ErrorKind::BudgetExceeded));
    // 220 candidate triples blow the 63-entry conflict table.
    CHECK(raises([] { search_max_density(make_family({complete({3}, 4)}), 12); },
                 ErrorKind::TooLarge));
}

TEST_CASE("pattern lower bounds") {
    auto bound = lower_bound_via_pattern(cat("K3_bb"), "HA");
    REQUIRE(bound.has_value());
    CHECK(bound->pattern == "HA");
    CHECK(bound->value == Root3(Rat(1), Rat(1, 18)));

    // The chain lands inside HA, so HA certifies nothing for it.
    CHECK_FALSE(lower_bound_via_pattern(cat("C13"), "HA").has_value());

    CHECK(raises([] { lower_bound_via_pattern(cat("K3_bb"), "nope"); },
                 ErrorKind::UnknownName));
    // G4_b is a catalog entry but stores no certified optimum.
    CHECK(raises([] { lower_bound_via_pattern(cat("K3_bb"), "G4_b"); },
                 ErrorKind::UnknownName));
    CHECK(raises([] { lower_bound_via_pattern(cat("HA"), "HB"); },
                 ErrorKind::LoopsNotAllowed));

    std::vector<PatternBound> found;
    CHECK(best_pattern_lower_bound(cat("H6_13"), &found) == Root3(Rat(4, 3)));
    CHECK(pattern_names(found) ==
          std::vector<std::string>{"HA", "HB", "HD", "HE", "HF"});

    found.clear();
    CHECK(best_pattern_lower_bound(cat("H5_13"), &found) == Root3(Rat(1)));
    CHECK(found.empty());

    found.clear();
    CHECK(best_pattern_lower_bound(cat("G4_b"), &found) ==
          Root3(Rat(4, 9), Rat(1, 3)));
    CHECK(pattern_names(found) == std::vector<std::string>{"HB"});
}

TEST_CASE("coloring upper bounds") {
    auto check_colorings = [](const RGraph& g, const ColoringBound& bound) {
        for (const auto& [name, map] : bound.colorings) {
            CHECK(verify_map(g, cat(name), map));
        }
        if (bound.containment) {
            CHECK(bound.containment->is_injective());
        }
    };

    auto h5 = upper_bound_via_coloring(cat("H5_13"));
    REQUIRE(h5.has_value());
    CHECK(h5->value == Root3(Rat(1)));
    CHECK(h5->target == "H5_13");
    CHECK(h5->colorings.size() == 1);
    CHECK_FALSE(h5->containment.has_value());
    check_colorings(cat("H5_13"), *h5);

    auto kb = upper_bound_via_coloring(cat("K3_bb"));
    REQUIRE(kb.has_value());
    CHECK(kb->value == Root3(Rat(1), Rat(1, 18)));
    CHECK(kb->target == "K3_bb");
    check_colorings(cat("K3_bb"), *kb);

    // The bare K3_bbb bound needs an actual copy of K3_bbb alongside the
    // coloring.
    auto kbbb = upper_bound_via_coloring(cat("K3_bbb"));
    REQUIRE(kbbb.has_value());
    CHECK(kbbb->value == Root3(Rat(1), Rat(2, 9)));
    CHECK(kbbb->target == "K3_bbb");
    REQUIRE(kbbb->containment.has_value());
    CHECK(verify_map(cat("K3_bbb"), cat("K3_bbb"), *kbbb->containment));
    check_colorings(cat("K3_bbb"), *kbbb);

    for (const char* name : {"H5_star", "H6_star"}) {
        auto star = upper_bound_via_coloring(cat(name));
        REQUIRE(star.has_value());
        CHECK(star->value == Root3(Rat(1), Rat(1, 9)));
        CHECK(star->target == name);
        check_colorings(cat(name), *star);
    }

    // The paired test: colorable into both halves, no containment required.
    RGraph prod = product(cat("K3_bbb"), cat("H4_bb"));
    auto paired = upper_bound_via_coloring(prod);
    REQUIRE(paired.has_value());
    CHECK(paired->value == Root3(Rat(1), Rat(1, 9)));
    CHECK(paired->target == "K3_bbb+H4_bb");
    CHECK(paired->colorings.size() == 2);
    CHECK_FALSE(paired->containment.has_value());
    check_colorings(prod, *paired);

    // H6_13 is K3_bbb-colorable but K3_bbb-free, and fails every other test.
    CHECK_FALSE(upper_bound_via_coloring(cat("H6_13")).has_value());
    CHECK_FALSE(upper_bound_via_coloring(cat("H4_bb")).has_value());
    CHECK_FALSE(upper_bound_via_coloring(cat("G4_b")).has_value());
}

TEST_CASE("degeneracy decisions") {
    for (const char* name : {"C13", "H5_13"}) {
        DegeneracyResult d = is_degenerate_13(cat(name));
        CHECK(d.degenerate);
        REQUIRE(d.witness.has_value());
        CHECK(verify_map(cat(name), cat("H5_13"), *d.witness));
    }
    for (const char* name : {"K3_bb", "G4_b", "H5_star"}) {
        DegeneracyResult d = is_degenerate_13(cat(name));
        CHECK_FALSE(d.degenerate);
        CHECK_FALSE(d.witness.has_value());
    }
    CHECK(raises([] { is_degenerate_13(cat("H4_23")); }, ErrorKind::UnsupportedTypes));
    CHECK(raises([] { is_degenerate_13(cat("HA")); }, ErrorKind::LoopsNotAllowed));
}

TEST_CASE("density classification") {
    const Root3 one{Rat(1)};

    auto replay = [](const RGraph& g, const PiClassification& c) {
        for (const Evidence& e : c.evidence) {
            if (e.rule == "coloring" || e.rule == "degenerate-coloring") {
                REQUIRE(e.map.has_value());
                CHECK(verify_map(g, cat(e.detail), *e.map));
            } else if (e.rule == "containment") {
                REQUIRE(e.map.has_value());
                CHECK(e.map->is_injective());
                CHECK(verify_map(cat(e.detail), g, *e.map));
            }
        }
    };

    PiClassification deg = classify_pi_13(cat("H5_13"));
    CHECK(deg.kind == PiClassification::Kind::Exact);
    CHECK(deg.value == one);
    REQUIRE(deg.evidence.size() == 1);
    CHECK(deg.evidence[0].rule == "degenerate-coloring");
    CHECK(deg.evidence[0].detail == "H5_13");
    CHECK(deg.conjecture_note.empty());
    replay(cat("H5_13"), deg);

    PiClassification kb = classify_pi_13(cat("K3_bb"));
    CHECK(kb.kind == PiClassification::Kind::Exact);
    CHECK(kb.value == Root3(Rat(1), Rat(1, 18)));
    REQUIRE(kb.evidence.size() == 2);
    CHECK(kb.evidence[0].rule == "coloring");
    CHECK(kb.evidence[1].rule == "containment");
    replay(cat("K3_bb"), kb);

    PiClassification kbbb = classify_pi_13(cat("K3_bbb"));
    CHECK(kbbb.kind == PiClassification::Kind::Exact);
    CHECK(kbbb.value == Root3(Rat(1), Rat(2, 9)));
    replay(cat("K3_bbb"), kbbb);

    for (const char* name : {"H5_star", "H6_star"}) {
        PiClassification star = classify_pi_13(cat(name));
        CHECK(star.kind == PiClassification::Kind::Exact);
        CHECK(star.value == Root3(Rat(1), Rat(1, 9)));
        CHECK(star.conjecture_note.empty());
        replay(cat(name), star);
    }

    // The six-vertex graph with the open density: certified bracket plus a
    // note that a sharper value is conjectured.
    for (const char* name : {"H6_13", "H6_b"}) {
        PiClassification open = classify_pi_13(cat(name));
        CHECK(open.kind == PiClassification::Kind::Interval);
        CHECK(open.lower == Root3(Rat(4, 3)));
        CHECK(open.upper == Root3(Rat(2)));
        CHECK_FALSE(open.conjecture_note.empty());
        std::vector<std::string> patterns;
        for (const Evidence& e : open.evidence) {
            CHECK(e.rule == "pattern-lower-bound");
            patterns.push_back(e.detail);
        }
        CHECK(patterns == std::vector<std::string>{"HA", "HB", "HD", "HE", "HF"});
    }

    PiClassification g4 = classify_pi_13(cat("G4_b"));
    CHECK(g4.kind == PiClassification::Kind::Interval);
    CHECK(g4.lower == Root3(Rat(4, 9), Rat(1, 3)));
    CHECK(g4.upper == Root3(Rat(2)));
    CHECK(g4.conjecture_note.empty());
    REQUIRE(g4.evidence.size() == 1);
    CHECK(g4.evidence[0].rule == "pattern-lower-bound");
    CHECK(g4.evidence[0].detail == "HB");

    PiClassification h6a = classify_pi_13(cat("H6_a"));
    CHECK(h6a.kind == PiClassification::Kind::Interval);
    CHECK(h6a.lower == Root3(Rat(1), Rat(1, 9)));
    CHECK(h6a.upper == Root3(Rat(2)));
    CHECK(h6a.conjecture_note.empty());

    // Both sides of the bracket can meet without an exactness certificate.
    RGraph prod = product(cat("K3_bbb"), cat("H4_bb"));
    PiClassification tight = classify_pi_13(prod);
    CHECK(tight.kind == PiClassification::Kind::Interval);
    CHECK(tight.lower == Root3(Rat(1), Rat(1, 9)));
    CHECK(tight.upper == Root3(Rat(1), Rat(1, 9)));
    replay(prod, tight);

    CHECK(raises([] { classify_pi_13(cat("H4_23")); }, ErrorKind::UnsupportedTypes));
    CHECK(raises([] { classify_pi_13(cat("HA")); }, ErrorKind::LoopsNotAllowed));
}

TEST_CASE("least-density witnesses beyond the chain") {
    struct Pinned {
        std::vector<int> R;
        const char* serialized;
    };
    const std::vector<Pinned> table{
        {{1, 3}, R"({"n":5,"edges":[[2],[3],[1,2,4],[1,3,5],[1,4,5]]})"},
        {{2, 3}, R"({"n":4,"edges":[[1,2],[1,3],[2,3,4]]})"},
        {{3, 4}, R"({"n":5,"edges":[[1,2,5],[1,3,5],[2,3,4,5]]})"},
        {{2, 5}, R"({"n":7,"edges":[[2,7],[3,7],[1,2,4,6,7],[1,3,5,6,7],[1,4,5,6,7]]})"},
        {{1, 2, 3}, R"({"n":5,"edges":[[5],[1,2],[1,3],[2,3,4]]})"},
    };
    for (const Pinned& row : table) {
        CAPTURE(row.serialized);
        RGraph w = nontrivial_degenerate_witness(row.R);
        CHECK(serialize_graph(w) == row.serialized);
        CHECK(edge_type_set(w) == row.R);
        CHECK_FALSE(blowup_colorable(w, chain(row.R)).has_value());
    }
    CHECK(isomorphic(nontrivial_degenerate_witness({2, 3}), cat("H4_23")));
    CHECK(isomorphic(nontrivial_degenerate_witness({1, 3}), cat("H5_13")));
    CHECK(is_degenerate_13(nontrivial_degenerate_witness({1, 3})).degenerate);

    CHECK(raises([] { nontrivial_degenerate_witness({1, 2}); }, ErrorKind::InvalidR));
    CHECK(raises([] { nontrivial_degenerate_witness({5}); }, ErrorKind::InvalidR));
    CHECK(raises([] { nontrivial_degenerate_witness({}); }, ErrorKind::InvalidR));
    CHECK(raises([] { nontrivial_degenerate_witness({0, 2}); }, ErrorKind::SpecMismatch));
}
