#pragma once

// Domain types shared by every module: triple sequences, colored transitive
// tournaments, labeled bipartite graphs, majority-tournament specs, and the
// violation certificates emitted by the verifiers. All indices, coordinates
// and colors are 1-based, in memory and on disk.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace capkit {

// ---------------------------------------------------------------------------
// values
// ---------------------------------------------------------------------------

struct Triple {
    int x = 1;
    int y = 1;
    int z = 1;

    int coord(int c) const;  // c in {1,2,3}

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Number of coordinates in which `to` strictly exceeds `from`.
int strict_increases(const Triple& from, const Triple& to);

// The pairwise order on triples: strict increase in at least two of the three
// coordinates. Antisymmetric but not transitive (three-cycles exist).
bool precedes(const Triple& from, const Triple& to);

// Ordered list of triples over the alphabet [1..alphabet_size].
// Well-formedness only bounds coordinates; whether every pair increases in
// two coordinates is decided by verify::triple_sequence, so invalid sequences
// stay representable as verifier inputs.
struct TripleSequence {
    int alphabet_size = 1;
    std::vector<Triple> triples;

    friend bool operator==(const TripleSequence&, const TripleSequence&) = default;
};

// Edge coloring of the transitive tournament on vertices 1..num_vertices.
// Every edge runs from the smaller to the larger endpoint; orientation is
// never stored. rows[i-1] holds the colors of (i,i+1), ..., (i,num_vertices).
struct TournamentColoring {
    int num_vertices = 1;
    int num_colors = 3;
    std::vector<std::vector<int>> rows;

    static TournamentColoring uniform(int n, int r, int color);

    int color(int i, int j) const;       // requires 1 <= i < j <= num_vertices
    void set_color(int i, int j, int c);
    std::int64_t num_edges() const;

    friend bool operator==(const TournamentColoring&, const TournamentColoring&) = default;
};

struct LabeledEdge {
    int a = 1;      // left endpoint
    int b = 1;      // right endpoint
    int label = 1;

    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

// Bipartite graph with integer edge labels; the edges of label z form the
// class E_z. No two edges may share the same (a, b) pair.
struct LabeledBipartiteGraph {
    int left = 1;
    int right = 1;
    int num_labels = 0;
    std::vector<LabeledEdge> edges;

    friend bool operator==(const LabeledBipartiteGraph&, const LabeledBipartiteGraph&) = default;
};

// k odd permutations sigma_1..sigma_k of [1..k] with sigma_i(1) = i, plus the
// side length n of the tuple cube they order.
struct MajorityTournamentSpec {
    int k = 1;
    int n = 1;
    std::vector<std::vector<int>> perms;

    friend bool operator==(const MajorityTournamentSpec&, const MajorityTournamentSpec&) = default;
};

// Complete oriented graph; forward[i-1][j-i-1] is true when edge {i,j} points
// from i to j. Exactly one direction per pair holds by construction.
struct Tournament {
    int num_vertices = 1;
    std::vector<std::vector<std::uint8_t>> forward;

    bool beats(int u, int v) const;      // u != v, both in [1..num_vertices]
    void set_forward(int i, int j, bool f);

    friend bool operator==(const Tournament&, const Tournament&) = default;
};

// ---------------------------------------------------------------------------
// violation certificates
// ---------------------------------------------------------------------------

// Pair i<j of a triple sequence with fewer than two strict coordinate increases.
struct TriplePairViolation {
    int i = 0;
    int j = 0;

    friend bool operator==(const TriplePairViolation&, const TriplePairViolation&) = default;
};

// Two distinct edges of one label class sharing an endpoint.
struct MatchingViolation {
    int label = 0;
    LabeledEdge e1, e2;

    friend bool operator==(const MatchingViolation&, const MatchingViolation&) = default;
};

// Cross edge joining the spans of two same-label edges.
struct InducedMatchingViolation {
    int label = 0;
    LabeledEdge e1, e2;   // same-label edges covering cross.a and cross.b
    LabeledEdge cross;    // differently labeled edge inside the span

    friend bool operator==(const InducedMatchingViolation&, const InducedMatchingViolation&) = default;
};

// Two same-label edges that cross: e1.a < e2.a but e2.b < e1.b.
struct OrderedMatchingViolation {
    int label = 0;
    LabeledEdge e1, e2;

    friend bool operator==(const OrderedMatchingViolation&, const OrderedMatchingViolation&) = default;
};

// Five-vertex pattern b_h, a_i, b_j, a_k, b_l with i<k and h<=j<=l: the outer
// edges share a label and both middle edges exist.
struct SigmaViolation {
    int label = 0;
    int h = 0, i = 0, j = 0, k = 0, l = 0;
    LabeledEdge outer_left, outer_right;  // (a_i,b_h) and (a_k,b_l), both labeled `label`
    LabeledEdge mid_left, mid_right;      // (a_i,b_j) and (a_k,b_j), any labels

    friend bool operator==(const SigmaViolation&, const SigmaViolation&) = default;
};

struct VertexRef {
    bool on_left = true;
    int index = 1;

    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

// Walk of length t = walk.size()-1 <= bound joining endpoints of two distinct
// edges of the same label class.
struct SeparationViolation {
    int label = 0;
    int bound = 0;
    std::vector<VertexRef> walk;
    LabeledEdge start_edge, end_edge;

    friend bool operator==(const SeparationViolation&, const SeparationViolation&) = default;
};

// Pair whose orientation entry is missing from or beyond the triangular storage.
struct TournamentShapeViolation {
    int i = 0;
    int j = 0;

    friend bool operator==(const TournamentShapeViolation&, const TournamentShapeViolation&) = default;
};

using Violation = std::variant<TriplePairViolation,
                               MatchingViolation,
                               InducedMatchingViolation,
                               OrderedMatchingViolation,
                               SigmaViolation,
                               SeparationViolation,
                               TournamentShapeViolation>;

std::string_view violation_kind(const Violation&);
std::string describe(const Violation&);   // one-line summary for logs and the CLI

// ---------------------------------------------------------------------------
// well-formedness and canonical serialization
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Throw ParseError when a type invariant is broken (out-of-range index,
// ragged row, duplicate (a,b) edge, even k, sigma_i(1) != i, ...).
void assert_well_formed(const TripleSequence&);
void assert_well_formed(const TournamentColoring&);
void assert_well_formed(const LabeledBipartiteGraph&);
void assert_well_formed(const MajorityTournamentSpec&);
void assert_well_formed(const Tournament&);

// Canonical text: JSON with sorted keys, two-space indent, trailing newline.
// parse(to_canonical_text(x)) == x and re-serialization is byte-identical.
std::string to_canonical_text(const TripleSequence&);
std::string to_canonical_text(const TournamentColoring&);
std::string to_canonical_text(const LabeledBipartiteGraph&);
std::string to_canonical_text(const MajorityTournamentSpec&);
std::string to_canonical_text(const Tournament&);
std::string to_canonical_text(const Violation&);

TripleSequence parse_triple_sequence(std::string_view text);
TournamentColoring parse_coloring(std::string_view text);
LabeledBipartiteGraph parse_bipartite_graph(std::string_view text);
MajorityTournamentSpec parse_majority_spec(std::string_view text);
Tournament parse_tournament(std::string_view text);
Violation parse_violation(std::string_view text);

}  // namespace capkit
