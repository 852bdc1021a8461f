#include "capkit/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "capkit/paths.hpp"
#include "capkit/verify.hpp"

namespace capkit::transform {

TripleSequence coloring_to_triples(const TournamentColoring& coloring) {
    assert_well_formed(coloring);
    if (coloring.num_colors != 3) {
        throw std::invalid_argument("coloring_to_triples requires exactly 3 colors");
    }
    auto records = paths::avoidance_records(coloring);
    TripleSequence seq;
    seq.alphabet_size = 1;
    seq.triples.reserve(records.size());
    for (const auto& record : records) {
        Triple t{record[0], record[1], record[2]};
        seq.alphabet_size = std::max({seq.alphabet_size, t.x, t.y, t.z});
        seq.triples.push_back(t);
    }
    return seq;
}

std::variant<TournamentColoring, Violation> triples_to_coloring(const TripleSequence& seq) {
    assert_well_formed(seq);
    if (seq.triples.empty()) {
        throw std::invalid_argument("triples_to_coloring requires a non-empty sequence");
    }
    if (auto breach = verify::triple_sequence(seq)) return *breach;

    const int n = static_cast<int>(seq.triples.size());
    TournamentColoring coloring = TournamentColoring::uniform(n, 3, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Triple& from = seq.triples[i - 1];
            const Triple& to = seq.triples[j - 1];
            int color = 1;  // all three coordinates increase: take the first
            for (int c = 1; c <= 3; ++c) {
                if (from.coord(c) >= to.coord(c)) {
                    color = c;
                    break;
                }
            }
            coloring.set_color(i, j, color);
        }
    }
    return coloring;
}

std::variant<LabeledBipartiteGraph, Violation> triples_to_bipartite(const TripleSequence& seq) {
    assert_well_formed(seq);
    if (auto breach = verify::triple_sequence(seq)) return *breach;

    LabeledBipartiteGraph g;
    g.left = seq.alphabet_size;
    g.right = seq.alphabet_size;
    g.num_labels = seq.alphabet_size;
    g.edges.reserve(seq.triples.size());
    for (const Triple& t : seq.triples) g.edges.push_back(LabeledEdge{t.x, t.y, t.z});

    // A valid sequence has at most one triple per (x,y) projection, so a
    // duplicate here can only mean an internal inconsistency.
    try {
        assert_well_formed(g);
    } catch (const ParseError&) {
        throw std::logic_error("valid triple sequence produced a duplicate (x,y) edge");
    }
    return g;
}

}  // namespace capkit::transform
