#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "capkit/construct.hpp"
#include "capkit/paths.hpp"
#include "capkit/verify.hpp"
#include "oracles.hpp"

using namespace capkit;

TEST_CASE("cube_coloring: rule spot checks and edge cases") {
    TournamentColoring cube = construct::cube_coloring(2, 3);
    CHECK(cube.num_vertices == 8);
    // Vertices in lexicographic order: (1,1,1)=1, (1,1,2)=2, (1,2,2)=4, (2,1,1)=5.
    CHECK(cube.color(1, 2) == 3);
    CHECK(cube.color(4, 5) == 1);

    TournamentColoring trivial = construct::cube_coloring(1, 3);
    CHECK(trivial.num_vertices == 1);
    CHECK(trivial.rows.empty());

    CHECK_THROWS_AS(construct::cube_coloring(100, 3, 1000), std::invalid_argument);
    CHECK_THROWS_AS(construct::cube_coloring(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(construct::cube_coloring(2, 1), std::invalid_argument);
}

TEST_CASE("cube_coloring avoiding-path tightness for m <= 3") {
    for (int m = 1; m <= 3; ++m) {
        TournamentColoring cube = construct::cube_coloring(m, 3);
        for (const auto& w : paths::longest_color_avoiding(cube)) {
            CHECK(w.length == m * m);
        }
    }
    // m=2 additionally checked against exhaustive path enumeration.
    auto brute = oracles::brute_longest_avoiding(construct::cube_coloring(2, 3));
    for (int c = 0; c < 3; ++c) CHECK(brute[c] == 4);
}

TEST_CASE("cube_coloring monochromatic tightness for r in {2,3} and m <= 3") {
    for (int r = 2; r <= 3; ++r) {
        for (int m = 1; m <= 3; ++m) {
            TournamentColoring cube = construct::cube_coloring(m, r);
            for (const auto& w : paths::longest_monochromatic(cube)) {
                CHECK(w.length == m);
            }
        }
    }
}

TEST_CASE("cube_triple_sequence: length m^3 over alphabet m^2") {
    TripleSequence one = construct::cube_triple_sequence(1);
    CHECK(one.triples == std::vector<Triple>{Triple{1, 1, 1}});

    TripleSequence two = construct::cube_triple_sequence(2);
    CHECK(two.triples.size() == 8);
    CHECK(two.alphabet_size == 4);
    CHECK_FALSE(verify::triple_sequence(two).has_value());

    TripleSequence three = construct::cube_triple_sequence(3);
    CHECK(three.triples.size() == 27);
    CHECK(three.alphabet_size == 9);
    CHECK_FALSE(verify::triple_sequence(three).has_value());
}

TEST_CASE("biclique_union: structure and verifier-backed properties") {
    LabeledBipartiteGraph g = construct::biclique_union(4);
    CHECK(g.left == 4);
    CHECK(g.right == 4);
    CHECK(g.num_labels == 4);
    CHECK(g.edges.size() == 8);
    // Each label forms a matching with one edge per component.
    for (int z = 1; z <= 4; ++z) {
        std::set<int> components;
        for (const LabeledEdge& e : g.edges) {
            if (e.label == z) components.insert((e.a - 1) / 2);
        }
        CHECK(components == std::set<int>{0, 1});
    }
    for (int l = 2; l <= 6; ++l) {
        CHECK_FALSE(verify::l_separated(g, l).has_value());
    }
    CHECK_FALSE(verify::sigma_free(g).has_value());

    LabeledBipartiteGraph single = construct::biclique_union(1);
    CHECK(single.edges == std::vector<LabeledEdge>{LabeledEdge{1, 1, 1}});

    LabeledBipartiteGraph nine = construct::biclique_union(9);
    CHECK(nine.edges.size() == 27);
    CHECK_FALSE(verify::l_separated(nine, 5).has_value());

    CHECK_THROWS_AS(construct::biclique_union(3), std::invalid_argument);
}

TEST_CASE("majority_tournament: fixed cases") {
    Tournament trivial = construct::majority_tournament(construct::cyclic_majority_spec(3, 1));
    CHECK(trivial.num_vertices == 1);

    MajorityTournamentSpec spec = construct::cyclic_majority_spec(3, 2);
    CHECK(spec.perms == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    Tournament t = construct::majority_tournament(spec);
    CHECK(t.num_vertices == 8);
    CHECK_FALSE(verify::tournament(t).has_value());

    // (1,1,1) is vertex 1, (2,2,2) is vertex 8: unanimous.
    CHECK(t.beats(1, 8));
    // x=(1,2,2) is vertex 4, y=(2,1,1) is vertex 5: orders 2 and 3 put y first.
    CHECK(t.beats(5, 4));
    CHECK_FALSE(t.beats(4, 5));

    CHECK_THROWS_AS(construct::majority_tournament(construct::cyclic_majority_spec(3, 2), 10),
                    std::invalid_argument);
}

TEST_CASE("majority tournaments from random odd specs pass the verifier") {
    std::mt19937_64 rng(1001);
    for (int iter = 0; iter < 20; ++iter) {
        int k = 3 + 2 * static_cast<int>(rng() % 2);
        int n = 1 + static_cast<int>(rng() % (k == 3 ? 3 : 2));
        MajorityTournamentSpec spec = construct::cyclic_majority_spec(k, n);
        // Shuffle the tails of the permutations, keeping sigma_i(1) = i.
        for (auto& perm : spec.perms) {
            std::shuffle(perm.begin() + 1, perm.end(), rng);
        }
        assert_well_formed(spec);
        Tournament t = construct::majority_tournament(spec);
        CHECK_FALSE(verify::tournament(t).has_value());
    }
}

TEST_CASE("valid sequences embed as forward subtournaments of the k=3 construction") {
    Tournament t2 = construct::majority_tournament(construct::cyclic_majority_spec(3, 2));
    for (const TripleSequence& seq : oracles::all_valid_sequences(2)) {
        CHECK(oracles::embeds_forward(seq, t2, 2));
    }

    Tournament t3 = construct::majority_tournament(construct::cyclic_majority_spec(3, 3));
    std::mt19937_64 rng(1002);
    for (int iter = 0; iter < 1000; ++iter) {
        TripleSequence seq = oracles::random_valid_sequence(3, rng);
        CHECK(oracles::embeds_forward(seq, t3, 3));
    }
}
