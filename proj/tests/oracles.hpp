#pragma once

// Test-only brute-force oracles and generators. Everything here stays
// independent of the implementation paths it cross-checks: paths are
// enumerated as vertex subsets, properties as literal quantifier scans,
// and searches as plain enumeration.

#include <cstdint>
#include <random>
#include <vector>

#include "capkit/core.hpp"

namespace oracles {

// Longest c-avoiding path per color, by enumerating all 2^N vertex subsets.
std::vector<int> brute_longest_avoiding(const capkit::TournamentColoring& coloring);

// Longest monochromatic path per color, same enumeration.
std::vector<int> brute_longest_monochromatic(const capkit::TournamentColoring& coloring);

// Longest strictly increasing/decreasing subsequence, O(n^2).
std::pair<int, int> quadratic_lis_lds(const std::vector<double>& values);

// Literal quantifier scans of the graph properties.
bool naive_induced(const capkit::LabeledBipartiteGraph& g);
bool naive_ordered(const capkit::LabeledBipartiteGraph& g);
bool naive_sigma(const capkit::LabeledBipartiteGraph& g);
bool naive_separated(const capkit::LabeledBipartiteGraph& g, int l);

// min over all 3^C(N,2) colorings of the max avoiding-path length, evaluated
// with the subset enumeration above.
int oracle_f(int num_vertices);

// Max valid sequence length via subsets of [1..n]^3 checked for pairwise
// comparability plus an acyclic order (n <= 2 only).
int oracle_F_subsets(int alphabet);

// Max valid sequence length via plain chain enumeration (no pruning).
int oracle_F_chains(int alphabet);

// Max transitive subset via all 2^N subsets and a topological-sort check.
int oracle_max_transitive(const capkit::Tournament& t);

// Max edges over every labeling of the n*n cells with {absent, 1..k},
// validated by naive_separated. Feasible for n == 2, small k.
int oracle_M(int side, int labels, int separation);

// All valid sequences over [1..n]^3, every nonempty prefix included once.
std::vector<capkit::TripleSequence> all_valid_sequences(int alphabet);

// Whether the sequence, read as tuple vertices of the n-cube construction,
// induces a forward-directed subtournament.
bool embeds_forward(const capkit::TripleSequence& seq, const capkit::Tournament& t, int n);

// Smallest t with t^r >= value.
int ceil_root(std::int64_t value, int r);

capkit::TournamentColoring random_coloring(int num_vertices, int num_colors, std::mt19937_64& rng);
capkit::TripleSequence random_valid_sequence(int alphabet, std::mt19937_64& rng);
capkit::LabeledBipartiteGraph random_graph(int max_side, int max_labels, std::mt19937_64& rng);
capkit::Tournament random_tournament(int num_vertices, std::mt19937_64& rng);

}  // namespace oracles
