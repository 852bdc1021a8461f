#pragma once

// Decision procedures with certificates for the structural properties of
// triple sequences, labeled bipartite graphs and tournaments. Every verifier
// scans in a fixed deterministic order and reports the first violation it
// meets; every certificate re-checks against the input in polynomial time.

#include <optional>
#include <variant>

#include "capkit/core.hpp"

namespace capkit::verify {

// Valid iff every pair i<j strictly increases in at least two coordinates.
// Reports the lexicographically first violating pair.
std::optional<Violation> triple_sequence(const TripleSequence& seq);

// Valid iff every label class is a matching and the subgraph induced by the
// vertices it spans contains no other edge.
std::optional<Violation> induced_matchings(const LabeledBipartiteGraph& g);

// Valid iff within each label class, sorting edges by left endpoint also
// sorts them strictly by right endpoint (no shared endpoint, no crossing).
std::optional<Violation> ordered_matchings(const LabeledBipartiteGraph& g);

// Valid iff the decomposition is ordered (checked first) and no five-vertex
// pattern b_h, a_i, b_j, a_k, b_l with i<k, h<=j<=l exists where the outer
// edges share a label and both middle edges are present. The degenerate
// choices j=h and j=l make this subsume the induced-matching condition, so
// sigma-free Valid implies both weaker verifiers accept.
std::optional<Violation> sigma_free(const LabeledBipartiteGraph& g);

// Valid iff every label class is a matching (checked first) and no walk of
// length <= l joins endpoints of two distinct edges of one class. Vertex
// sequences are treated as walks; shortest violating walks are paths anyway.
std::optional<Violation> l_separated(const LabeledBipartiteGraph& g, int l);

struct DegreeSquareReport {
    long long sum_degree_squares = 0;
    long long bound = 0;              // (left+right) * num_labels
    bool pass = false;                // sum <= bound
    double average_degree_bound = 0;  // sqrt(num_labels), from convexity
    double edge_bound = 0;            // (left+right) * sqrt(num_labels) / 2
    long long edges = 0;
};

// The two-edge-walk counting step for 2-separated decompositions. Requires
// l_separated(g, 2); a failing precondition returns its certificate instead.
std::variant<DegreeSquareReport, Violation> degree_square_diagnostic(const LabeledBipartiteGraph& g);

// Valid iff exactly one orientation is stored per pair.
std::optional<Violation> tournament(const Tournament& t);

// Certificate replay: true iff the violation holds against the given object.
bool recheck(const Violation& v, const TripleSequence& seq);
bool recheck(const Violation& v, const LabeledBipartiteGraph& g);
bool recheck(const Violation& v, const Tournament& t);

}  // namespace capkit::verify
