#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capkit/construct.hpp"
#include "capkit/paths.hpp"
#include "capkit/search.hpp"
#include "capkit/verify.hpp"
#include "oracles.hpp"

using namespace capkit;
using search::Budget;
using search::Exactness;

TEST_CASE("exact_f matches the brute-force oracle for N <= 4") {
    const int expected[] = {0, 1, 2, 3, 3};
    for (int N = 1; N <= 4; ++N) {
        search::FResult r = search::exact_f(N);
        CHECK(r.flag == Exactness::exact);
        CHECK(r.value == expected[N]);
        CHECK(r.value == oracles::oracle_f(N));

        int achieved = 0;
        for (const auto& w : paths::longest_color_avoiding(r.witness)) {
            achieved = std::max(achieved, w.length);
        }
        CHECK(achieved == r.value);
        CHECK(r.value >= oracles::ceil_root(N, 2));
    }
}

TEST_CASE("exact_f under an exhausted budget returns a flagged upper bound") {
    Budget tiny;
    tiny.max_nodes = 5;
    search::FResult r = search::exact_f(5, tiny);
    CHECK(r.flag == Exactness::upper_bound);
    CHECK(r.value >= 4);  // true f(5) is 4; a partial search can only sit above it
    int achieved = 0;
    for (const auto& w : paths::longest_color_avoiding(r.witness)) {
        achieved = std::max(achieved, w.length);
    }
    CHECK(achieved == r.value);
}

TEST_CASE("exact_F matches the oracles for n <= 3") {
    search::SequenceResult one = search::exact_F(1);
    CHECK(one.flag == Exactness::exact);
    CHECK(one.value == 1);
    CHECK(one.value == oracles::oracle_F_subsets(1));

    search::SequenceResult two = search::exact_F(2);
    CHECK(two.flag == Exactness::exact);
    CHECK(two.value == 2);
    CHECK(two.value == oracles::oracle_F_subsets(2));
    CHECK_FALSE(verify::triple_sequence(two.witness).has_value());

    search::SequenceResult three = search::exact_F(3);
    CHECK(three.flag == Exactness::exact);
    CHECK(three.value == 4);
    CHECK(three.value == oracles::oracle_F_chains(3));
    CHECK_FALSE(verify::triple_sequence(three.witness).has_value());
}

TEST_CASE("exact_F budget exhaustion yields a valid flagged lower bound") {
    Budget tiny;
    tiny.max_nodes = 50;
    search::SequenceResult r = search::exact_F(3, tiny);
    CHECK(r.flag == Exactness::lower_bound);
    CHECK(r.value >= 1);
    CHECK(r.value <= 4);
    CHECK_FALSE(verify::triple_sequence(r.witness).has_value());
}

TEST_CASE("the pairwise order has three-cycles the solver must survive") {
    Triple a{2, 1, 3}, b{3, 2, 1}, c{1, 3, 2};
    CHECK(precedes(a, b));
    CHECK(precedes(b, c));
    CHECK(precedes(c, a));
    TripleSequence cycle{3, {a, b, c}};
    CHECK(verify::triple_sequence(cycle) == Violation{TriplePairViolation{1, 3}});
}

TEST_CASE("sandwich bounds at perfect squares") {
    // ceil(n^{3/2}) - 1 < F(n) <= n^2; at n=1 this is 0 < 1 <= 1.
    search::SequenceResult one = search::exact_F(1);
    CHECK(one.value == 1);

    search::SequenceResult four = search::exact_F(4);
    CHECK(four.flag == Exactness::exact);
    CHECK(four.value == 8);  // the cube sequence is optimal at n=4
    CHECK(four.value == oracles::oracle_F_chains(4));
    CHECK(four.value > oracles::ceil_root(4LL * 4 * 4, 2) - 1);
    CHECK(four.value <= 16);
    CHECK_FALSE(verify::triple_sequence(four.witness).has_value());

    search::SequenceResult greedy = search::heuristic_F(4);
    CHECK(greedy.value >= 8);
    CHECK(greedy.flag == Exactness::lower_bound);
}

TEST_CASE("max_transitive_subtournament") {
    Tournament transitive;
    transitive.num_vertices = 6;
    transitive.forward.resize(5);
    for (int i = 1; i < 6; ++i) transitive.forward[i - 1].assign(6 - i, 1);
    search::SubtournamentResult r = search::max_transitive_subtournament(transitive);
    CHECK(r.flag == Exactness::exact);
    CHECK(r.value == 6);

    Tournament cycle;
    cycle.num_vertices = 3;
    cycle.forward = {{1, 0}, {1}};  // 1->2, 3->1, 2->3
    r = search::max_transitive_subtournament(cycle);
    CHECK(r.value == 2);

    std::mt19937_64 rng(1101);
    for (int iter = 0; iter < 40; ++iter) {
        Tournament t = oracles::random_tournament(10, rng);
        search::SubtournamentResult sr = search::max_transitive_subtournament(t);
        CHECK(sr.flag == Exactness::exact);
        CHECK(sr.value == oracles::oracle_max_transitive(t));
        for (std::size_t i = 0; i < sr.witness.size(); ++i) {
            for (std::size_t j = i + 1; j < sr.witness.size(); ++j) {
                CHECK(t.beats(sr.witness[i], sr.witness[j]));
            }
        }
    }
}

TEST_CASE("exact_M_l small exact values") {
    search::GraphResult r = search::exact_M_l(2, 2, 2);
    CHECK(r.flag == Exactness::exact);
    CHECK(r.value == 2);
    CHECK(r.value == oracles::oracle_M(2, 2, 2));

    // Exactly n^{3/2} at the perfect square n = 4: the seeded biclique is optimal.
    search::GraphResult square = search::exact_M_l(4, 4, 2);
    CHECK(square.flag == Exactness::exact);
    CHECK(square.value == 8);

    search::GraphResult diag = search::exact_M_l(2, 1, 1);
    CHECK(diag.value == 2);
    CHECK(diag.value == oracles::oracle_M(2, 1, 1));

    CHECK(search::exact_M_l(2, 2, 1).value == oracles::oracle_M(2, 2, 1));
    CHECK(search::exact_M_l(2, 3, 2).value == oracles::oracle_M(2, 3, 2));
    CHECK(search::exact_M_l(3, 2, 2).value == oracles::oracle_M(3, 2, 2));
    CHECK(search::exact_M_l(3, 3, 1).value == oracles::oracle_M(3, 3, 1));
    CHECK_FALSE(verify::l_separated(r.witness, 2).has_value());
}

TEST_CASE("exact_M_l seeds the biclique incumbent under tight budgets") {
    Budget tiny;
    tiny.max_nodes = 100;
    search::GraphResult r = search::exact_M_l(4, 4, 2, tiny);
    CHECK(r.flag == Exactness::lower_bound);
    CHECK(r.value >= 8);
    CHECK_FALSE(verify::l_separated(r.witness, 2).has_value());
}

TEST_CASE("duality_check over N = 1..2 pins F(1) = 1") {
    search::DualityReport report = search::duality_check(1, 2);
    CHECK(report.consistent);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].n == 1);
    CHECK(report.entries[0].F_value == 1);
    CHECK(report.entries[0].ok);
}

TEST_CASE("duality_check over N = 1..5") {
    search::DualityReport report = search::duality_check(1, 5);
    CHECK(report.consistent);
    CHECK(report.step_ok);
    CHECK(report.f_values == std::vector<int>{1, 2, 3, 3, 4});
    REQUIRE(report.entries.size() == 3);
    CHECK(report.entries[0].n == 1);
    CHECK(report.entries[0].F_value == 1);
    CHECK(report.entries[1].n == 2);
    CHECK(report.entries[1].F_value == 2);
    CHECK(report.entries[2].n == 3);
    CHECK(report.entries[2].F_value == 4);
    for (const auto& entry : report.entries) CHECK(entry.ok);
}

TEST_CASE("heuristics return verified lower bounds and never claim exactness") {
    search::SequenceResult f4 = search::heuristic_F(4);
    CHECK(f4.value >= 8);
    CHECK(f4.flag == Exactness::lower_bound);
    CHECK_FALSE(verify::triple_sequence(f4.witness).has_value());

    search::SequenceResult f1 = search::heuristic_F(1);
    CHECK(f1.value == 1);

    search::GraphResult m9 = search::heuristic_M_l(9, 9, 2);
    CHECK(m9.value == 27);
    CHECK(m9.flag == Exactness::lower_bound);
    CHECK_FALSE(verify::l_separated(m9.witness, 2).has_value());
}

TEST_CASE("identical inputs and budgets reproduce identical results") {
    Budget fixed;
    fixed.max_nodes = 100'000;
    search::FResult a = search::exact_f(4, fixed);
    search::FResult b = search::exact_f(4, fixed);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);

    search::SequenceResult c = search::exact_F(3, fixed);
    search::SequenceResult d = search::exact_F(3, fixed);
    CHECK(c.value == d.value);
    CHECK(c.witness == d.witness);
    CHECK(c.stats.nodes == d.stats.nodes);
}
