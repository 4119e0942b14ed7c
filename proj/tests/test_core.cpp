#include <doctest.h>

#include <turan/algebraic.hpp>
#include <turan/hypergraph.hpp>
#include <turan/io.hpp>

#include "test_util.hpp"

using namespace turan;
using test_util::raises;

TEST_CASE("rationals normalize, compare, and print exactly") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(5, 4) + Rat(1, 4) == Rat(3, 2));
    CHECK(Rat(7, 6) * Rat(3, 7) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(2, 3) == Rat(-1, 6));
    CHECK(Rat(5, 4) / Rat(5, 2) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(7, 6) > Rat(1));
    CHECK(Rat(5, 4).to_string() == "5/4");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(-1, 2).to_string() == "-1/2");
    CHECK(Rat(1, 3).sign() == 1);
    CHECK(Rat(0).sign() == 0);
    CHECK(raises([] { return Rat(1, 0); }, ErrorKind::InvariantViolation));
    CHECK(raises([] { return Rat(1) / Rat(0); }, ErrorKind::InvariantViolation));
    CHECK(raises([] { return Rat(INT64_MAX - 1, 1) + Rat(INT64_MAX - 1, 1); },
                 ErrorKind::Overflow));
}

TEST_CASE("binomial coefficients are exact and guard the 64-bit range") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(40, 3) == 9880);
    CHECK(binomial(120, 3) == 280840);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(raises([] { return binomial(80, 40); }, ErrorKind::Overflow));
}

TEST_CASE("quadratic-field values compare exactly") {
    const Root3 a(Rat(1), Rat(1, 18));  // 1 + sqrt(3)/18
    const Root3 b(Rat(1), Rat(2, 9));   // 1 + 2 sqrt(3)/9
    CHECK(a > Root3(Rat(1)));
    CHECK(a < b);
    CHECK(Root3(Rat(4, 3)) < b);   // 4/3 < 1.3849...
    CHECK(Root3(Rat(7, 6)) > a);   // 7/6 > 1.0962...
    CHECK(a + a == Root3(Rat(2), Rat(1, 9)));
    CHECK(Root3(Rat(0), Rat(1)) * Root3(Rat(0), Rat(1)) == Root3(Rat(3)));
    CHECK(a.to_double() == doctest::Approx(1.0962250448649376).epsilon(1e-14));
    CHECK(Root3(Rat(1)).is_rational());
    CHECK_FALSE(a.is_rational());
    CHECK(a.to_string() == "1 + (1/18)*sqrt(3)");
    CHECK((a - a).sign() == 0);
    CHECK((Root3(Rat(2)) - Root3(Rat(0), Rat(1))).sign() == 1);   // 2 > sqrt(3)
    CHECK((Root3(Rat(-2)) + Root3(Rat(0), Rat(1))).sign() == -1); // sqrt(3) < 2
}

TEST_CASE("graphs sort edges canonically and validate their invariants") {
    RGraph g = make_graph(3, {{3, 1, 2}, {2}});
    CHECK(g.edges.size() == 2);
    CHECK(g.edges[0].entries == std::vector<int>{2});
    CHECK(g.edges[1].entries == std::vector<int>{1, 2, 3});
    CHECK(g == make_graph(3, {{2}, {1, 2, 3}}));

    CHECK(raises([] { make_graph(3, {{1, 2}, {2, 1}}); }, ErrorKind::InvariantViolation));
    CHECK(raises([] { make_graph(2, {{1, 2, 3}}); }, ErrorKind::InvariantViolation));
    CHECK(raises([] { make_graph(3, {{1, 1, 2}}); }, ErrorKind::LoopsNotAllowed));

    RGraph loopy = make_graph(2, {{1}, {1, 2, 2}}, true);
    CHECK(loopy.has_loop_edges());
    CHECK(loopy.edges[1].has_repeats());
    CHECK(loopy.edges[1].multiplicities() ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});

    RGraph flagged_only = make_graph(2, {{1, 2}}, true);
    CHECK(flagged_only.allows_loops);
    CHECK_FALSE(flagged_only.has_loop_edges());
}

TEST_CASE("edge type sets, level graphs, and degrees") {
    RGraph g = make_graph(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}});
    CHECK(edge_type_set(g) == std::vector<int>{1, 3});
    RGraph level3 = level_graph(g, 3);
    CHECK(level3.n == 4);
    CHECK(level3.edges.size() == 2);
    CHECK(edge_type_set(level3) == std::vector<int>{3});
    CHECK(level_graph(g, 2).edges.empty());
    CHECK(edge_degree(g, 1) == 3);
    CHECK(edge_degree(g, 3) == 1);
}

TEST_CASE("complete graphs and the shorthand density") {
    RGraph k = complete({1, 3}, 4);
    CHECK(k.edges.size() == 4 + 4);
    CHECK(lubell(k, 4) == Rat(2));
    for (int n = 4; n <= 8; ++n) CHECK(lubell(complete({1, 3}, n), n) == Rat(2));

    RGraph g = make_graph(3, {{1}, {1, 2, 3}});
    CHECK(lubell(g, 3) == Rat(4, 3));
    CHECK(lubell(g, 5) == Rat(1, 5) + Rat(1, 10));

    CHECK(raises([&g] { lubell(g, 2); }, ErrorKind::CardinalityExceedsN));
    CHECK(raises([] { complete({4}, 3); }, ErrorKind::CardinalityExceedsN));
    RGraph loopy = make_graph(2, {{1, 2, 2}}, true);
    CHECK(raises([&loopy] { lubell(loopy, 4); }, ErrorKind::LoopsNotAllowed));
}

TEST_CASE("relabeling permutes consistently") {
    RGraph g = make_graph(3, {{1}, {1, 2, 3}});
    RGraph r = relabel(g, {3, 1, 2});  // 1->3, 2->1, 3->2
    CHECK(r.edges[0].entries == std::vector<int>{3});
    CHECK(r.edges[1].entries == std::vector<int>{1, 2, 3});
    CHECK(raises([&g] { relabel(g, {1, 1, 2}); }, ErrorKind::DomainMismatch));
    CHECK(raises([&g] { relabel(g, {1, 2}); }, ErrorKind::DomainMismatch));
}

TEST_CASE("documents round-trip through parse and serialize") {
    RGraph g = make_graph(3, {{2}, {1, 2, 3}});
    std::string doc = serialize_graph(g);
    CHECK(doc == "{\"n\":3,\"edges\":[[2],[1,2,3]]}");
    CHECK(parse_graph(doc) == g);

    RGraph loopy = make_graph(2, {{1}, {1, 2, 2}}, true);
    std::string loop_doc = serialize_graph(loopy);
    CHECK(loop_doc == "{\"n\":2,\"edges\":[[1],[1,2,2]],\"loops\":true}");
    CHECK(parse_graph(loop_doc) == loopy);
    CHECK(serialize_graph(parse_graph(loop_doc)) == loop_doc);

    CHECK(raises([] { parse_graph("not json"); }, ErrorKind::ParseError));
    CHECK(raises([] { parse_graph("{\"edges\":[[1]]}"); }, ErrorKind::ParseError));
    CHECK(raises([] { parse_graph("{\"n\":2,\"edges\":[[0,1]]}"); },
                 ErrorKind::InvariantViolation));
    CHECK(raises([] { parse_graph("{\"n\":2,\"edges\":[[1,1]]}"); },
                 ErrorKind::LoopsNotAllowed));
}

TEST_CASE("digit shorthand expands to graphs") {
    RGraph h5 = graph_from_shorthand("2;3;124;135;145");
    CHECK(h5.n == 5);
    CHECK(h5.edges.size() == 5);
    CHECK(h5 == make_graph(5, {{2}, {3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}}));

    CHECK(graph_from_shorthand("1;12", 4).n == 4);  // explicit n keeps isolated vertices
    RGraph loopy = graph_from_shorthand("1;122;222", 0, true);
    CHECK(loopy.has_loop_edges());
    CHECK(raises([] { graph_from_shorthand("1;x2"); }, ErrorKind::ParseError));
    CHECK(raises([] { graph_from_shorthand("1;122"); }, ErrorKind::LoopsNotAllowed));
}
