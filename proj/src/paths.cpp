#include "capkit/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace capkit::paths {

namespace {

struct DpTable {
    // len[k][c] and pred[k][c] for vertex k (1-based) and color c (1-based);
    // pred 0 means the path starts at k.
    std::vector<std::vector<int>> len;
    std::vector<std::vector<int>> pred;
};

// mono=false: edges of color c are forbidden. mono=true: only they are allowed.
DpTable run_dp(const TournamentColoring& coloring, bool mono) {
    const int n = coloring.num_vertices;
    const int r = coloring.num_colors;
    DpTable dp;
    dp.len.assign(n + 1, std::vector<int>(r + 1, 0));
    dp.pred.assign(n + 1, std::vector<int>(r + 1, 0));
    for (int k = 1; k <= n; ++k) {
        for (int c = 1; c <= r; ++c) {
            int best = 0;
            int best_pred = 0;
            for (int j = 1; j < k; ++j) {
                bool usable = mono ? coloring.color(j, k) == c : coloring.color(j, k) != c;
                if (usable && dp.len[j][c] > best) {
                    best = dp.len[j][c];
                    best_pred = j;
                }
            }
            dp.len[k][c] = best + 1;
            dp.pred[k][c] = best_pred;
        }
    }
    return dp;
}

std::vector<WitnessPath> extract_witnesses(const TournamentColoring& coloring,
                                           const DpTable& dp, bool mono) {
    const int n = coloring.num_vertices;
    const int r = coloring.num_colors;
    std::vector<WitnessPath> result(r);
    for (int c = 1; c <= r; ++c) {
        int best = 0;
        int end = 0;
        for (int k = 1; k <= n; ++k) {
            if (dp.len[k][c] > best) {
                best = dp.len[k][c];
                end = k;
            }
        }
        WitnessPath& w = result[c - 1];
        w.length = best;
        for (int k = end; k != 0; k = dp.pred[k][c]) w.vertices.push_back(k);
        std::reverse(w.vertices.begin(), w.vertices.end());
        if (static_cast<int>(w.vertices.size()) != w.length) {
            throw std::logic_error("witness path length mismatch");
        }
        for (std::size_t p = 1; p < w.vertices.size(); ++p) {
            int u = w.vertices[p - 1];
            int v = w.vertices[p];
            bool ok = u < v && (mono ? coloring.color(u, v) == c : coloring.color(u, v) != c);
            if (!ok) throw std::logic_error("witness path fails re-verification");
        }
    }
    return result;
}

}  // namespace

std::vector<AvoidanceRecord> avoidance_records(const TournamentColoring& coloring) {
    assert_well_formed(coloring);
    DpTable dp = run_dp(coloring, false);
    std::vector<AvoidanceRecord> records(coloring.num_vertices);
    for (int k = 1; k <= coloring.num_vertices; ++k) {
        records[k - 1].assign(dp.len[k].begin() + 1, dp.len[k].end());
    }
    return records;
}

std::vector<WitnessPath> longest_color_avoiding(const TournamentColoring& coloring) {
    assert_well_formed(coloring);
    DpTable dp = run_dp(coloring, false);
    return extract_witnesses(coloring, dp, false);
}

std::vector<WitnessPath> longest_monochromatic(const TournamentColoring& coloring) {
    assert_well_formed(coloring);
    DpTable dp = run_dp(coloring, true);
    return extract_witnesses(coloring, dp, true);
}

namespace {

// Patience lengths with predecessor links; strict increase. Returns per-element
// lengths; fills preds and the index of the last element of one longest run.
std::vector<int> patience(const std::vector<double>& values, std::vector<int>& pred, int& last) {
    const int n = static_cast<int>(values.size());
    std::vector<int> length(n, 0);
    pred.assign(n, -1);
    std::vector<double> tail_value;
    std::vector<int> tail_index;
    last = -1;
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(tail_value.begin(), tail_value.end(), values[i]);
        std::size_t pos = static_cast<std::size_t>(it - tail_value.begin());
        if (pos == tail_value.size()) {
            tail_value.push_back(values[i]);
            tail_index.push_back(i);
        } else {
            tail_value[pos] = values[i];
            tail_index[pos] = i;
        }
        length[i] = static_cast<int>(pos) + 1;
        pred[i] = pos > 0 ? tail_index[pos - 1] : -1;
    }
    if (!tail_index.empty()) last = tail_index.back();
    return length;
}

std::vector<std::size_t> backtrack(const std::vector<int>& pred, int last) {
    std::vector<std::size_t> out;
    for (int i = last; i >= 0; i = pred[i]) out.push_back(static_cast<std::size_t>(i));
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

MonotoneResult monotone_subsequences(const std::vector<double>& values) {
    std::set<double> distinct(values.begin(), values.end());
    if (distinct.size() != values.size()) {
        throw std::invalid_argument("values must be pairwise distinct");
    }

    MonotoneResult result;
    std::vector<int> inc_pred, dec_pred;
    int inc_last = -1, dec_last = -1;
    std::vector<int> inc_len = patience(values, inc_pred, inc_last);

    std::vector<double> negated(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) negated[i] = -values[i];
    std::vector<int> dec_len = patience(negated, dec_pred, dec_last);

    result.lis_length = inc_len.empty() ? 0 : *std::max_element(inc_len.begin(), inc_len.end());
    result.lds_length = dec_len.empty() ? 0 : *std::max_element(dec_len.begin(), dec_len.end());
    result.lis = backtrack(inc_pred, inc_last);
    result.lds = backtrack(dec_pred, dec_last);
    result.labels.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        result.labels.emplace_back(inc_len[i], dec_len[i]);
    }
    return result;
}

}  // namespace capkit::paths
