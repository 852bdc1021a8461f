#pragma once

// The three reductions between representations: coloring -> triple sequence,
// triple sequence -> coloring, and triple sequence -> labeled bipartite graph.

#include <variant>

#include "capkit/core.hpp"

namespace capkit::transform {

// Triple k is the avoidance record of vertex k; the alphabet is the realized
// maximum entry. The output always passes verify::triple_sequence.
// Requires a 3-coloring (throws std::invalid_argument otherwise).
TripleSequence coloring_to_triples(const TournamentColoring& coloring);

// Edge (i,j) takes the unique coordinate in which triple i does not strictly
// increase to triple j; when all three increase, color 1. Validates its input
// eagerly and returns the first violating pair instead of a coloring.
// The sequence must be non-empty.
std::variant<TournamentColoring, Violation> triples_to_coloring(const TripleSequence& seq);

// One edge (a_x, b_y) labeled z per triple (x,y,z), over left = right =
// alphabet_size sides and alphabet_size labels. Validates eagerly.
std::variant<LabeledBipartiteGraph, Violation> triples_to_bipartite(const TripleSequence& seq);

}  // namespace capkit::transform
