#include "dompoly/extremal.hpp"

#include <algorithm>
#include <cmath>

namespace dompoly {

SetFamily shadow(const SetFamily& f) {
    if (f.k() < 1) throw Error("shadow requires k >= 1");
    std::vector<VertexSet> out;
    out.reserve(f.size() * static_cast<std::size_t>(f.k()));
    for (auto s : f.sets()) {
        for (int v : s) out.push_back(s.without(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SetFamily(f.ground(), f.k() - 1, std::move(out));
}

SetFamily all_k_subsets(int n, VertexSet ground, int k) {
    std::vector<VertexSet> out;
    const auto members = ground.to_vector();
    const int m = static_cast<int>(members.size());
    if (k >= 0 && k <= m) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            VertexSet s;
            for (int i : idx) s = s.with(members[i]);
            out.push_back(s);
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return SetFamily(n, std::max(k, 0), std::move(out));
}

double generalized_binomial(double x, int k) {
    if (k < 0) throw Error("generalized binomial requires k >= 0");
    if (x < k - 1) throw Error("generalized binomial requires x >= k - 1");
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= (x - i) / (i + 1);
    return out;
}

double solve_x(std::uint64_t family_size, int k) {
    if (k < 1) throw Error("solve_x requires k >= 1");
    if (family_size == 0) throw Error("solve_x requires a nonempty family");
    const double target = static_cast<double>(family_size);
    double lo = k;
    double hi = k + target;
    while (true) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (generalized_binomial(mid, k) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Prefer the endpoint that reproduces the target more closely.
    return std::abs(generalized_binomial(lo, k) - target) <= std::abs(generalized_binomial(hi, k) - target) ? lo : hi;
}

KKReport check_kk(const SetFamily& f) {
    if (f.size() == 0) throw Error("check_kk requires a nonempty family");
    if (f.k() < 1) throw Error("check_kk requires k >= 1");
    KKReport report{};
    report.family_size = f.size();
    report.k = f.k();
    report.x_solved = solve_x(f.size(), f.k());
    report.shadow_size = shadow(f).size();
    report.bound = generalized_binomial(report.x_solved, f.k() - 1);
    const double s = static_cast<double>(report.shadow_size);
    report.bound_met = s >= report.bound - kShadowSlack;
    const double rounded = std::round(report.x_solved);
    const bool tight = report.bound_met && s <= report.bound + kShadowSlack;
    if (tight && std::abs(report.x_solved - rounded) <= kShadowSlack) {
        VertexSet ground;
        for (auto m : f.sets()) ground |= m;
        if (ground.size() == static_cast<int>(rounded) && all_k_subsets(f.ground(), ground, f.k()) == f) {
            report.equality = true;
            report.clique_witness = ground;
        }
    }
    return report;
}

namespace {

bool find_clique(const std::vector<VertexSet>& adj, VertexSet cand, int need) {
    if (need == 0) return true;
    if (cand.size() < need) return false;
    while (!cand.empty()) {
        if (cand.size() < need) return false;
        int v = cand.min();
        cand = cand.without(v);
        if (find_clique(adj, cand & adj[v], need - 1)) return true;
    }
    return false;
}

}  // namespace

bool is_clique_free(const Graph& g, int q) {
    if (q < 1) throw Error("clique size must be >= 1");
    // A vertex in a q-clique has degree >= q-1; peel the rest.
    VertexSet alive = g.vertices();
    bool peeled = true;
    while (peeled) {
        peeled = false;
        for (int v : alive) {
            if ((g.rows()[v] & alive).size() < q - 1) {
                alive = alive.without(v);
                peeled = true;
            }
        }
    }
    std::vector<VertexSet> adj(g.rows());
    for (auto& row : adj) row &= alive;
    return !find_clique(adj, alive, q);
}

std::int64_t turan_max_edges(int r, int a) {
    if (r < 1 || a < 1) throw Error("turan_max_edges requires r >= 1 and a >= 1");
    return static_cast<std::int64_t>(r) * (r - 1) / 2 * a * a;
}

Graph dominating_pair_graph(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = closed_neighborhood(g, v);
    std::vector<VertexSet> rows(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((closed[u] | closed[v]) == g.vertices()) {
                rows[u] = rows[u].with(v);
                rows[v] = rows[v].with(u);
            }
        }
    }
    return Graph::from_adjacency(n, std::move(rows));
}

}  // namespace dompoly
