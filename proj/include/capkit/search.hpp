#pragma once

// Exact (budgeted) and heuristic solvers for the extremal quantities: the
// min-max avoiding-path value f(N), the longest-sequence value F(n), maximum
// l-separated decompositions M_l, and maximum transitive subtournaments.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "capkit/core.hpp"

namespace capkit::search {

struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 120.0;
    int threads = 1;  // accepted for interface stability; solvers run sequentially

    // Optional diagnostic hook, called every few million nodes.
    std::function<void(std::uint64_t nodes)> progress;
};

// Which side of the true value a budget-exhausted run certifies: searches for
// minima report upper bounds, searches for maxima report lower bounds.
enum class Exactness { exact, lower_bound, upper_bound };

std::string_view exactness_name(Exactness e);

struct Stats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct FResult {
    int value = 0;
    TournamentColoring witness;
    Exactness flag = Exactness::exact;
    Stats stats;
};

struct SequenceResult {
    int value = 0;
    TripleSequence witness;
    Exactness flag = Exactness::exact;
    Stats stats;
};

struct SubtournamentResult {
    int value = 0;
    std::vector<int> witness;  // vertex chain, each earlier vertex beats each later one
    Exactness flag = Exactness::exact;
    Stats stats;
};

struct GraphResult {
    int value = 0;
    LabeledBipartiteGraph witness;
    Exactness flag = Exactness::exact;
    Stats stats;
};

// Minimum over all 3-colorings of the longest 1-color-avoiding path length.
// Enumerates colorings in canonical color order (first occurrences 1,2,3) and
// prunes branches whose partial coloring already reaches the incumbent.
FResult exact_f(int num_vertices, const Budget& budget = {});

// Longest sequence of triples over [1..n] with the pairwise two-coordinate
// increase property. Appending is checked against every chosen triple, since
// the pairwise order is not transitive.
SequenceResult exact_F(int alphabet, const Budget& budget = {});

// Maximum vertex subset inducing a transitive subtournament.
SubtournamentResult max_transitive_subtournament(const Tournament& t, const Budget& budget = {});

// Maximum edges over n+n bipartite graphs decomposable into k l-separated
// matchings. Seeds the incumbent from biclique_union when n is a perfect
// square and k == n.
GraphResult exact_M_l(int side, int labels, int separation, const Budget& budget = {});

struct DualityEntry {
    int n = 0;           // alphabet at which f jumps
    int expected_N = 0;  // last N with f(N) == n
    long long F_value = 0;
    bool ok = false;
};

struct DualityReport {
    int N_lo = 0;
    int N_hi = 0;
    std::vector<int> f_values;  // f(N_lo), ..., f(N_hi)
    bool step_ok = false;       // monotone, consecutive steps <= 1, f(1) == 1
    std::vector<DualityEntry> entries;
    bool consistent = false;
    std::vector<std::string> lines;  // human-readable findings
};

// Cross-checks exact_f and exact_F: F(n) = N exactly when f(N) = n and
// f(N+1) > n, plus the step property. Any mismatch marks the report
// inconsistent; a budget too small for exactness throws.
DualityReport duality_check(int N_lo, int N_hi, const Budget& budget = {});

// Greedy witnesses seeded from the explicit constructions. Never exact.
SequenceResult heuristic_F(int alphabet, const Budget& budget = {});
GraphResult heuristic_M_l(int side, int labels, int separation, const Budget& budget = {});

}  // namespace capkit::search
