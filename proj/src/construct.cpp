#include "capkit/construct.hpp"

#include <stdexcept>
#include <vector>

#include "capkit/transform.hpp"

namespace capkit::construct {

namespace {

// m^r with an overflow-safe cap check.
long long checked_power(int m, int r, long long cap) {
    long long value = 1;
    for (int i = 0; i < r; ++i) {
        value *= m;
        if (value > cap) return -1;
    }
    return value;
}

// Tuples over [1..m]^r in lexicographic order, coordinate 1 most significant.
std::vector<std::vector<int>> enumerate_tuples(int m, int r, long long count) {
    std::vector<std::vector<int>> tuples;
    tuples.reserve(static_cast<std::size_t>(count));
    std::vector<int> current(r, 1);
    while (true) {
        tuples.push_back(current);
        int pos = r - 1;
        while (pos >= 0 && current[pos] == m) {
            current[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++current[pos];
    }
    return tuples;
}

}  // namespace

TournamentColoring cube_coloring(int m, int r, long long max_vertices) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    long long n = checked_power(m, r, max_vertices);
    if (n < 0) {
        throw std::invalid_argument("m^r exceeds the size limit of " + std::to_string(max_vertices));
    }

    auto tuples = enumerate_tuples(m, r, n);
    TournamentColoring coloring = TournamentColoring::uniform(static_cast<int>(n), r, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int c = 1;
            while (tuples[i - 1][c - 1] == tuples[j - 1][c - 1]) ++c;
            coloring.set_color(i, j, c);
        }
    }
    return coloring;
}

TripleSequence cube_triple_sequence(int m, long long max_vertices) {
    return transform::coloring_to_triples(cube_coloring(m, 3, max_vertices));
}

LabeledBipartiteGraph biclique_union(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    int s = 1;
    while (static_cast<long long>(s) * s < n) ++s;
    if (static_cast<long long>(s) * s != n) {
        throw std::invalid_argument("n must be a perfect square");
    }

    LabeledBipartiteGraph g;
    g.left = n;
    g.right = n;
    g.num_labels = n;
    g.edges.reserve(static_cast<std::size_t>(n) * s);
    for (int component = 0; component < s; ++component) {
        int label = 1;
        for (int u = 1; u <= s; ++u) {
            for (int v = 1; v <= s; ++v) {
                g.edges.push_back(LabeledEdge{component * s + u, component * s + v, label});
                ++label;
            }
        }
    }
    return g;
}

Tournament majority_tournament(const MajorityTournamentSpec& spec, long long max_pair_comparisons) {
    assert_well_formed(spec);
    long long n = checked_power(spec.n, spec.k, max_pair_comparisons);
    if (n < 0 || n * (n - 1) / 2 > max_pair_comparisons) {
        throw std::invalid_argument("majority tournament exceeds the pair-comparison cap of " +
                                    std::to_string(max_pair_comparisons));
    }

    auto tuples = enumerate_tuples(spec.n, spec.k, n);
    Tournament t;
    t.num_vertices = static_cast<int>(n);
    t.forward.resize(n >= 1 ? n - 1 : 0);
    for (int i = 1; i < n; ++i) t.forward[i - 1].assign(n - i, 0);

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto& u = tuples[i - 1];
            const auto& v = tuples[j - 1];
            int u_first = 0;
            for (const auto& perm : spec.perms) {
                for (int pos = 0; pos < spec.k; ++pos) {
                    int c = perm[pos] - 1;
                    if (u[c] != v[c]) {
                        if (u[c] < v[c]) ++u_first;
                        break;
                    }
                }
            }
            // Distinct tuples are strictly ordered by every significance
            // order, so with odd k one side always holds a strict majority.
            t.set_forward(i, j, 2 * u_first > spec.k);
        }
    }
    return t;
}

MajorityTournamentSpec cyclic_majority_spec(int k, int n) {
    MajorityTournamentSpec spec;
    spec.k = k;
    spec.n = n;
    spec.perms.resize(k >= 1 ? k : 0);
    for (int i = 1; i <= k; ++i) {
        for (int p = 0; p < k; ++p) spec.perms[i - 1].push_back((i - 1 + p) % k + 1);
    }
    assert_well_formed(spec);
    return spec;
}

}  // namespace capkit::construct
