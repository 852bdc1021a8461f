#include "capkit/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "capkit/construct.hpp"
#include "capkit/paths.hpp"
#include "capkit/verify.hpp"

namespace capkit::search {

std::string_view exactness_name(Exactness e) {
    switch (e) {
        case Exactness::exact: return "exact";
        case Exactness::lower_bound: return "lower-bound";
        case Exactness::upper_bound: return "upper-bound";
    }
    return "unknown";
}

namespace {

// Node and wall-clock accounting shared by the solvers. The clock is polled
// every 1024 nodes; node budgets alone make runs reproducible.
class Meter {
  public:
    explicit Meter(const Budget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Returns false once the budget is exhausted.
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > budget_.max_nodes) {
            exhausted_ = true;
            return false;
        }
        if ((nodes_ & 1023) == 0 && elapsed() > budget_.max_seconds) {
            exhausted_ = true;
            return false;
        }
        if (budget_.progress && (nodes_ & ((1u << 22) - 1)) == 0) budget_.progress(nodes_);
        return true;
    }

    bool exhausted() const { return exhausted_; }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    Stats stats() const { return Stats{nodes_, elapsed()}; }

  private:
    const Budget& budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

int avoiding_value(const TournamentColoring& coloring) {
    int best = 0;
    for (const auto& w : paths::longest_color_avoiding(coloring)) best = std::max(best, w.length);
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// exact_f
// ---------------------------------------------------------------------------

FResult exact_f(int num_vertices, const Budget& budget) {
    if (num_vertices < 1) throw std::invalid_argument("N must be positive");
    const int n = num_vertices;
    const int r = 3;

    Meter meter(budget);
    TournamentColoring work = TournamentColoring::uniform(n, r, 1);

    // The uniform coloring avoids color 2 on every edge, so its value is N;
    // it seeds the incumbent and the search can only improve on it.
    FResult result;
    result.witness = work;
    result.value = n;

    // records[k][c] for the prefix processed so far.
    std::vector<std::vector<int>> records(n + 1, std::vector<int>(r + 1, 0));
    for (int c = 1; c <= r; ++c) records[1][c] = 1;

    // prefix_value[k] = avoiding value of the coloring restricted to 1..k.
    std::vector<int> prefix_value(n + 1, 0);
    prefix_value[1] = 1;

    auto place_vertex = [&](auto&& self, int k, int max_used) -> void {
        if (meter.exhausted()) return;
        if (k > n) {
            if (prefix_value[n] < result.value) {
                result.value = prefix_value[n];
                result.witness = work;
            }
            return;
        }
        auto place_edge = [&](auto&& inner, int j, int used) -> void {
            if (meter.exhausted()) return;
            if (j == k) {
                int added = 0;
                for (int c = 1; c <= r; ++c) {
                    int best = 0;
                    for (int v = 1; v < k; ++v) {
                        if (work.color(v, k) != c) best = std::max(best, records[v][c]);
                    }
                    records[k][c] = best + 1;
                    added = std::max(added, records[k][c]);
                }
                prefix_value[k] = std::max(prefix_value[k - 1], added);
                // Later vertices can only lengthen avoiding paths, so a prefix
                // already at the incumbent cannot improve on it.
                if (prefix_value[k] < result.value) self(self, k + 1, used);
                return;
            }
            int limit = std::min(r, used + 1);
            for (int c = 1; c <= limit; ++c) {
                if (!meter.tick()) return;
                work.set_color(j, k, c);
                inner(inner, j + 1, std::max(used, c));
                if (meter.exhausted()) return;
            }
        };
        place_edge(place_edge, 1, max_used);
    };

    if (n == 1) {
        result.value = 1;
    } else {
        place_vertex(place_vertex, 2, 0);
    }

    result.flag = meter.exhausted() ? Exactness::upper_bound : Exactness::exact;
    result.stats = meter.stats();
    if (avoiding_value(result.witness) != result.value) {
        throw std::logic_error("exact_f witness does not achieve the reported value");
    }
    return result;
}

// ---------------------------------------------------------------------------
// exact_F
// ---------------------------------------------------------------------------

namespace {

std::vector<Triple> all_triples(int alphabet) {
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(alphabet) * alphabet * alphabet);
    for (int x = 1; x <= alphabet; ++x) {
        for (int y = 1; y <= alphabet; ++y) {
            for (int z = 1; z <= alphabet; ++z) out.push_back(Triple{x, y, z});
        }
    }
    return out;
}

// Candidates stay lexicographically sorted, so distinct (x,y) projections are
// contiguous. No two triples sharing a projection can ever coexist, which
// makes the projection count an upper bound on the remaining extension.
int distinct_projections(const std::vector<Triple>& candidates) {
    int count = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i == 0 || candidates[i].x != candidates[i - 1].x ||
            candidates[i].y != candidates[i - 1].y) {
            ++count;
        }
    }
    return count;
}

void require_valid_sequence(const TripleSequence& seq, const char* who) {
    if (verify::triple_sequence(seq).has_value()) {
        throw std::logic_error(std::string(who) + " produced an invalid witness");
    }
}

}  // namespace

SequenceResult exact_F(int alphabet, const Budget& budget) {
    if (alphabet < 1) throw std::invalid_argument("alphabet must be positive");

    Meter meter(budget);
    SequenceResult result;
    result.witness.alphabet_size = alphabet;
    result.witness.triples = {Triple{1, 1, 1}};
    result.value = 1;

    std::vector<Triple> chosen;

    auto extend = [&](auto&& self, const std::vector<Triple>& candidates) -> void {
        if (meter.exhausted()) return;
        int len = static_cast<int>(chosen.size());
        if (len + distinct_projections(candidates) <= result.value) return;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (!meter.tick()) return;
            const Triple& t = candidates[idx];
            chosen.push_back(t);
            if (static_cast<int>(chosen.size()) > result.value) {
                result.value = static_cast<int>(chosen.size());
                result.witness.triples = chosen;
            }
            std::vector<Triple> next;
            next.reserve(candidates.size());
            for (const Triple& c : candidates) {
                if (precedes(t, c)) next.push_back(c);
            }
            self(self, next);
            chosen.pop_back();
            if (meter.exhausted()) return;
        }
    };

    extend(extend, all_triples(alphabet));

    result.flag = meter.exhausted() ? Exactness::lower_bound : Exactness::exact;
    result.stats = meter.stats();
    require_valid_sequence(result.witness, "exact_F");
    if (static_cast<int>(result.witness.triples.size()) != result.value) {
        throw std::logic_error("exact_F witness does not achieve the reported value");
    }
    return result;
}

// ---------------------------------------------------------------------------
// max_transitive_subtournament
// ---------------------------------------------------------------------------

SubtournamentResult max_transitive_subtournament(const Tournament& t, const Budget& budget) {
    if (verify::tournament(t).has_value()) {
        throw std::invalid_argument("input does not pass the tournament verifier");
    }

    Meter meter(budget);
    SubtournamentResult result;
    result.witness = {1};
    result.value = 1;

    std::vector<int> chosen;

    auto extend = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (meter.exhausted()) return;
        int len = static_cast<int>(chosen.size());
        if (len + static_cast<int>(candidates.size()) <= result.value) return;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (!meter.tick()) return;
            int v = candidates[idx];
            chosen.push_back(v);
            if (static_cast<int>(chosen.size()) > result.value) {
                result.value = static_cast<int>(chosen.size());
                result.witness = chosen;
            }
            std::vector<int> next;
            next.reserve(candidates.size());
            for (int w : candidates) {
                if (w != v && t.beats(v, w)) next.push_back(w);
            }
            self(self, next);
            chosen.pop_back();
            if (meter.exhausted()) return;
        }
    };

    std::vector<int> all(t.num_vertices);
    for (int v = 1; v <= t.num_vertices; ++v) all[v - 1] = v;
    extend(extend, all);

    result.flag = meter.exhausted() ? Exactness::lower_bound : Exactness::exact;
    result.stats = meter.stats();
    for (std::size_t i = 0; i < result.witness.size(); ++i) {
        for (std::size_t j = i + 1; j < result.witness.size(); ++j) {
            if (!t.beats(result.witness[i], result.witness[j])) {
                throw std::logic_error("transitive subtournament witness fails re-verification");
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// exact_M_l
// ---------------------------------------------------------------------------

namespace {

bool separated_valid(const LabeledBipartiteGraph& g, int separation) {
    return !verify::l_separated(g, separation).has_value();
}

}  // namespace

GraphResult exact_M_l(int side, int labels, int separation, const Budget& budget) {
    if (side < 1 || labels < 1 || separation < 1) {
        throw std::invalid_argument("side, labels and separation must all be positive");
    }

    Meter meter(budget);
    GraphResult result;
    result.witness = LabeledBipartiteGraph{side, side, labels, {}};
    result.value = 0;

    // Construction-based incumbent when the parameters admit it.
    int root = 1;
    while (root * root < side) ++root;
    if (root * root == side && labels == side) {
        LabeledBipartiteGraph seed = construct::biclique_union(side);
        if (separated_valid(seed, separation)) {
            result.witness = seed;
            result.value = static_cast<int>(seed.edges.size());
        }
    }

    const int total_cells = side * side;
    LabeledBipartiteGraph work{side, side, labels, {}};

    auto place = [&](auto&& self, int cell, int max_label) -> void {
        if (meter.exhausted()) return;
        int placed = static_cast<int>(work.edges.size());
        if (placed + (total_cells - cell) <= result.value) return;
        if (cell == total_cells) return;
        int a = cell / side + 1;
        int b = cell % side + 1;
        int limit = std::min(labels, max_label + 1);
        for (int lab = 1; lab <= limit; ++lab) {
            if (!meter.tick()) return;
            work.edges.push_back(LabeledEdge{a, b, lab});
            if (separated_valid(work, separation)) {
                if (static_cast<int>(work.edges.size()) > result.value) {
                    result.value = static_cast<int>(work.edges.size());
                    result.witness = work;
                }
                self(self, cell + 1, std::max(max_label, lab));
            }
            work.edges.pop_back();
            if (meter.exhausted()) return;
        }
        self(self, cell + 1, max_label);
    };

    place(place, 0, 0);

    result.flag = meter.exhausted() ? Exactness::lower_bound : Exactness::exact;
    result.stats = meter.stats();
    if (!separated_valid(result.witness, separation) ||
        static_cast<int>(result.witness.edges.size()) != result.value) {
        throw std::logic_error("exact_M_l witness fails re-verification");
    }
    return result;
}

// ---------------------------------------------------------------------------
// duality_check
// ---------------------------------------------------------------------------

DualityReport duality_check(int N_lo, int N_hi, const Budget& budget) {
    if (N_lo < 1 || N_hi < N_lo) throw std::invalid_argument("invalid N range");

    DualityReport report;
    report.N_lo = N_lo;
    report.N_hi = N_hi;
    report.consistent = true;

    for (int N = N_lo; N <= N_hi; ++N) {
        FResult r = exact_f(N, budget);
        if (r.flag != Exactness::exact) {
            throw std::runtime_error("budget too small for exact f(" + std::to_string(N) + ")");
        }
        report.f_values.push_back(r.value);
    }

    report.step_ok = true;
    if (N_lo == 1 && report.f_values[0] != 1) {
        report.step_ok = false;
        report.lines.push_back("f(1) != 1");
    }
    for (std::size_t i = 1; i < report.f_values.size(); ++i) {
        int prev = report.f_values[i - 1];
        int cur = report.f_values[i];
        if (cur < prev || cur > prev + 1) {
            report.step_ok = false;
            report.lines.push_back("step property fails at N=" + std::to_string(N_lo + (int)i));
        }
    }
    if (!report.step_ok) report.consistent = false;

    // Every visible jump f(N) = n, f(N+1) = n+1 pins F(n) = N exactly.
    for (std::size_t i = 1; i < report.f_values.size(); ++i) {
        if (report.f_values[i] != report.f_values[i - 1] + 1) continue;
        DualityEntry entry;
        entry.n = report.f_values[i - 1];
        entry.expected_N = N_lo + static_cast<int>(i) - 1;
        SequenceResult F = exact_F(entry.n, budget);
        if (F.flag != Exactness::exact) {
            throw std::runtime_error("budget too small for exact F(" + std::to_string(entry.n) + ")");
        }
        entry.F_value = F.value;
        entry.ok = F.value == entry.expected_N;
        if (!entry.ok) {
            report.consistent = false;
            report.lines.push_back("fatal: F(" + std::to_string(entry.n) + ") = " +
                                   std::to_string(F.value) + ", expected " +
                                   std::to_string(entry.expected_N));
        } else {
            report.lines.push_back("F(" + std::to_string(entry.n) + ") = " +
                                   std::to_string(F.value) + " matches the jump at N=" +
                                   std::to_string(entry.expected_N));
        }
        // Cross-check both directions of the equivalence over the whole range.
        for (int N = N_lo; N <= N_hi; ++N) {
            int f = report.f_values[N - N_lo];
            if (f <= entry.n && F.value < N) {
                report.consistent = false;
                report.lines.push_back("fatal: f(" + std::to_string(N) + ") <= " +
                                       std::to_string(entry.n) + " but F < N");
            }
            if (f > entry.n && F.value >= N) {
                report.consistent = false;
                report.lines.push_back("fatal: f(" + std::to_string(N) + ") > " +
                                       std::to_string(entry.n) + " but F >= N");
            }
        }
        report.entries.push_back(entry);
    }
    return report;
}

// ---------------------------------------------------------------------------
// heuristics
// ---------------------------------------------------------------------------

SequenceResult heuristic_F(int alphabet, const Budget& budget) {
    if (alphabet < 1) throw std::invalid_argument("alphabet must be positive");
    Meter meter(budget);

    TripleSequence seq;
    seq.alphabet_size = alphabet;
    int root = 1;
    while (root * root < alphabet) ++root;
    if (root * root == alphabet) {
        TripleSequence cube = construct::cube_triple_sequence(root);
        seq.triples = cube.triples;  // alphabet root^2 == requested alphabet
    }

    // One deterministic greedy pass over the lexicographic candidates.
    for (const Triple& t : all_triples(alphabet)) {
        if (!meter.tick()) break;
        bool ok = true;
        for (const Triple& c : seq.triples) {
            if (!precedes(c, t)) {
                ok = false;
                break;
            }
        }
        if (ok) seq.triples.push_back(t);
    }

    SequenceResult result;
    result.witness = seq;
    result.value = static_cast<int>(seq.triples.size());
    result.flag = Exactness::lower_bound;
    result.stats = meter.stats();
    require_valid_sequence(result.witness, "heuristic_F");
    return result;
}

GraphResult heuristic_M_l(int side, int labels, int separation, const Budget& budget) {
    if (side < 1 || labels < 1 || separation < 1) {
        throw std::invalid_argument("side, labels and separation must all be positive");
    }
    Meter meter(budget);

    LabeledBipartiteGraph g{side, side, labels, {}};
    int root = 1;
    while (root * root < side) ++root;
    if (root * root == side && labels >= side) {
        LabeledBipartiteGraph seed = construct::biclique_union(side);
        seed.num_labels = labels;
        if (separated_valid(seed, separation)) g = seed;
    }

    std::vector<std::vector<bool>> used(side + 1, std::vector<bool>(side + 1, false));
    for (const LabeledEdge& e : g.edges) used[e.a][e.b] = true;
    for (int a = 1; a <= side; ++a) {
        for (int b = 1; b <= side; ++b) {
            if (used[a][b]) continue;
            for (int lab = 1; lab <= labels; ++lab) {
                if (!meter.tick()) break;
                g.edges.push_back(LabeledEdge{a, b, lab});
                if (separated_valid(g, separation)) break;
                g.edges.pop_back();
            }
            if (meter.exhausted()) break;
        }
        if (meter.exhausted()) break;
    }

    GraphResult result;
    result.witness = g;
    result.value = static_cast<int>(g.edges.size());
    result.flag = Exactness::lower_bound;
    result.stats = meter.stats();
    if (!separated_valid(result.witness, separation)) {
        throw std::logic_error("heuristic_M_l witness fails re-verification");
    }
    return result;
}

}  // namespace capkit::search
