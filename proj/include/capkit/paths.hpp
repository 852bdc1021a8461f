#pragma once

// Longest color-avoiding and monochromatic directed paths in colored
// transitive tournaments, plus longest monotone subsequences.

#include <utility>
#include <vector>

#include "capkit/core.hpp"

namespace capkit::paths {

// Entry c-1 of record k-1 is the vertex-length of the longest directed path
// ending at vertex k that uses no edge of color c. Record 0 is (1,...,1).
using AvoidanceRecord = std::vector<int>;

std::vector<AvoidanceRecord> avoidance_records(const TournamentColoring& coloring);

struct WitnessPath {
    int length = 0;
    std::vector<int> vertices;   // strictly increasing, length == vertices.size()
};

// Per color c (index c-1): the longest path avoiding c, with a witness.
// Ties break toward the smallest endpoint and smallest predecessor.
std::vector<WitnessPath> longest_color_avoiding(const TournamentColoring& coloring);

// Per color c (index c-1): the longest path using only color c.
std::vector<WitnessPath> longest_monochromatic(const TournamentColoring& coloring);

struct MonotoneResult {
    int lis_length = 0;
    int lds_length = 0;
    std::vector<std::size_t> lis;                // 0-based positions into the input
    std::vector<std::size_t> lds;
    std::vector<std::pair<int, int>> labels;     // per element: (lis ending here, lds ending here)
};

// Longest strictly increasing / decreasing subsequences of pairwise distinct
// values, O(N log N). Throws std::invalid_argument on duplicates. The labels
// are pairwise distinct, which forces max(lis, lds) >= ceil(sqrt(N)).
MonotoneResult monotone_subsequences(const std::vector<double>& values);

}  // namespace capkit::paths
