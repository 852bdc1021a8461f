#pragma once

// Generators for the explicit constructions, each paired with verifier-backed
// post-conditions in the tests.

#include "capkit/core.hpp"

namespace capkit::construct {

// Vertices are the r-tuples over [1..m] in lexicographic order; an edge takes
// the leftmost coordinate at which its endpoint tuples differ. Throws
// std::invalid_argument when m^r exceeds max_vertices.
TournamentColoring cube_coloring(int m, int r = 3, long long max_vertices = 4096);

// coloring_to_triples(cube_coloring(m, 3)): m^3 triples over alphabet m^2.
TripleSequence cube_triple_sequence(int m, long long max_vertices = 4096);

// sqrt(n) disjoint copies of K_{sqrt(n),sqrt(n)}; within each component the n
// edges take the n labels bijectively in row-major order. Requires n to be a
// perfect square. Total edges n^{3/2}.
LabeledBipartiteGraph biclique_union(int n);

// The k-majority tournament on all n^k tuples (plain lexicographic indexing):
// x beats y iff a strict majority of the k significance orders rank x first.
// Throws std::invalid_argument when the pair count exceeds the cap.
Tournament majority_tournament(const MajorityTournamentSpec& spec,
                               long long max_pair_comparisons = 1'000'000);

// The cyclic family sigma_i = (i, i+1, ..., k, 1, ..., i-1).
MajorityTournamentSpec cyclic_majority_spec(int k, int n);

}  // namespace capkit::construct
