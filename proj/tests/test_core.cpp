#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capkit/construct.hpp"
#include "capkit/core.hpp"
#include "capkit/verify.hpp"
#include "oracles.hpp"

using namespace capkit;

namespace {

TripleSequence four_triple_example() {
    return TripleSequence{9, {Triple{3, 2, 7}, Triple{7, 3, 2}, Triple{1, 8, 8}, Triple{2, 9, 9}}};
}

}  // namespace

TEST_CASE("triple coordinate access and the pairwise order") {
    Triple t{2, 5, 9};
    CHECK(t.coord(1) == 2);
    CHECK(t.coord(2) == 5);
    CHECK(t.coord(3) == 9);
    CHECK_THROWS_AS(t.coord(4), std::out_of_range);

    CHECK(strict_increases(Triple{1, 1, 1}, Triple{2, 2, 1}) == 2);
    CHECK(precedes(Triple{1, 1, 1}, Triple{2, 2, 1}));
    CHECK_FALSE(precedes(Triple{1, 1, 1}, Triple{1, 1, 2}));
}

TEST_CASE("the pairwise order is antisymmetric over [1..3]^3") {
    std::vector<Triple> points;
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
            for (int z = 1; z <= 3; ++z) points.push_back(Triple{x, y, z});
    for (const Triple& a : points) {
        for (const Triple& b : points) {
            CHECK_FALSE((precedes(a, b) && precedes(b, a)));
        }
    }
}

TEST_CASE("identity round trips") {
    TripleSequence one{1, {Triple{1, 1, 1}}};
    std::string text = to_canonical_text(one);
    CHECK(parse_triple_sequence(text) == one);
    CHECK(to_canonical_text(parse_triple_sequence(text)) == text);

    TournamentColoring single = TournamentColoring::uniform(1, 3, 1);
    CHECK(single.rows.empty());
    CHECK(parse_coloring(to_canonical_text(single)) == single);
}

TEST_CASE("the four-triple example round trips") {
    TripleSequence seq = four_triple_example();
    std::string text = to_canonical_text(seq);
    CHECK(parse_triple_sequence(text) == seq);
    CHECK(to_canonical_text(parse_triple_sequence(text)) == text);
}

TEST_CASE("cube coloring file round trips") {
    TournamentColoring c = construct::cube_coloring(2, 3);
    TournamentColoring back = parse_coloring(to_canonical_text(c));
    CHECK(back.num_vertices == 8);
    CHECK(back.num_colors == 3);
    CHECK(back == c);
}

TEST_CASE("parse rejects invariant breaches") {
    CHECK_THROWS_AS(parse_bipartite_graph(R"({"left":2,"right":2,"num_labels":2,
        "edges":[[1,1,1],[1,1,2]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_majority_spec(R"({"k":2,"n":1,"perms":[[1,2],[2,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_majority_spec(R"({"k":3,"n":1,
        "perms":[[1,2,3],[3,2,1],[3,1,2]]})"),
                    ParseError);  // sigma_2(1) != 2
    CHECK_THROWS_AS(parse_triple_sequence(R"({"n":2,"triples":[[1,1,3]]})"), ParseError);
    CHECK_THROWS_AS(parse_triple_sequence("not json"), ParseError);
    CHECK_THROWS_AS(parse_coloring(R"({"num_vertices":3,"num_colors":3,"colors":[[1,1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_coloring(R"({"num_vertices":3,"num_colors":3,"colors":[[1,4],[1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_tournament(R"({"num_vertices":2,"forward":[[1]]})"), ParseError);
}

TEST_CASE("random objects round trip byte-identically") {
    std::mt19937_64 rng(20240901);
    for (int iter = 0; iter < 200; ++iter) {
        TournamentColoring c = oracles::random_coloring(1 + iter % 9, 2 + iter % 3, rng);
        std::string text = to_canonical_text(c);
        CHECK(parse_coloring(text) == c);
        CHECK(to_canonical_text(parse_coloring(text)) == text);

        LabeledBipartiteGraph g = oracles::random_graph(6, 4, rng);
        std::string gtext = to_canonical_text(g);
        CHECK(parse_bipartite_graph(gtext) == g);
        CHECK(to_canonical_text(parse_bipartite_graph(gtext)) == gtext);

        Tournament t = oracles::random_tournament(1 + iter % 8, rng);
        std::string ttext = to_canonical_text(t);
        CHECK(parse_tournament(ttext) == t);

        TripleSequence s = oracles::random_valid_sequence(1 + iter % 4, rng);
        std::string stext = to_canonical_text(s);
        CHECK(parse_triple_sequence(stext) == s);
    }
}

TEST_CASE("majority spec round trips") {
    MajorityTournamentSpec spec = construct::cyclic_majority_spec(3, 2);
    std::string text = to_canonical_text(spec);
    CHECK(parse_majority_spec(text) == spec);
    CHECK(to_canonical_text(parse_majority_spec(text)) == text);
}

TEST_CASE("certificates serialize, parse and re-check") {
    TripleSequence bad{2, {Triple{1, 1, 1}, Triple{1, 1, 2}}};
    auto breach = verify::triple_sequence(bad);
    REQUIRE(breach.has_value());
    std::string text = to_canonical_text(*breach);
    Violation parsed = parse_violation(text);
    CHECK(parsed == *breach);
    CHECK(to_canonical_text(parsed) == text);
    CHECK(verify::recheck(parsed, bad));

    LabeledBipartiteGraph crossing{2, 2, 1, {LabeledEdge{1, 2, 1}, LabeledEdge{2, 1, 1}}};
    auto ordered = verify::ordered_matchings(crossing);
    REQUIRE(ordered.has_value());
    Violation reparsed = parse_violation(to_canonical_text(*ordered));
    CHECK(reparsed == *ordered);
    CHECK(verify::recheck(reparsed, crossing));
}

TEST_CASE("violation descriptions name their kind") {
    Violation v = TriplePairViolation{1, 2};
    CHECK(violation_kind(v) == "triple_pair");
    CHECK(describe(v).find("(1,2)") != std::string::npos);
}
