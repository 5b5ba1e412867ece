#include "dompoly/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace dompoly {

Graph Graph::from_adjacency(int n, std::vector<VertexSet> rows) {
    if (n < 0 || n > kMaxVertices) {
        throw BudgetError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
    if (static_cast<int>(rows.size()) != n) {
        throw Error("adjacency has " + std::to_string(rows.size()) + " rows, expected " +
                    std::to_string(n));
    }
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
        if (!rows[v].subset_of(all)) throw Error("neighbor index out of range at vertex " + std::to_string(v));
        if (rows[v].contains(v)) throw Error("loop at vertex " + std::to_string(v));
        for (int u : rows[v]) {
            if (!rows[u].contains(v)) {
                throw Error("asymmetric adjacency between " + std::to_string(v) + " and " +
                            std::to_string(u));
            }
        }
    }
    return Graph(n, std::move(rows));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > kMaxVertices) {
        throw BudgetError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
    std::vector<VertexSet> rows(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("loop at vertex " + std::to_string(u));
        rows[u] = rows[u].with(v);
        rows[v] = rows[v].with(u);
    }
    return Graph(n, std::move(rows));
}

Graph Graph::edgeless(int n) {
    return from_adjacency(n, std::vector<VertexSet>(static_cast<std::size_t>(std::max(n, 0))));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw Error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (auto row : adj_) best = std::min(best, row.size());
    return best;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (auto row : adj_) out.push_back(row.size());
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    keep &= vertices();
    std::array<int, kMaxVertices> index{};
    int m = 0;
    for (int v : keep) index[v] = m++;
    std::vector<VertexSet> rows(m);
    for (int v : keep) {
        VertexSet row;
        for (int u : adj_[v] & keep) row = row.with(index[u]);
        rows[index[v]] = row;
    }
    return Graph(m, std::move(rows));
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    return induced(vertices().without(v));
}

Graph Graph::relabel(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error("relabel: permutation has wrong length");
    VertexSet seen;
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen.contains(p)) throw Error("relabel: not a permutation");
        seen = seen.with(p);
    }
    std::vector<VertexSet> rows(n_);
    for (int v = 0; v < n_; ++v) {
        VertexSet row;
        for (int u : adj_[v]) row = row.with(perm[u]);
        rows[perm[v]] = row;
    }
    return Graph(n_, std::move(rows));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    return g.neighbors(v).with(v);
}

VertexSet nonneighbor_set(const Graph& g, int v) {
    return g.vertices() - closed_neighborhood(g, v);
}

Graph complement(const Graph& g) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = (all - g.rows()[v]).without(v);
    return Graph::from_adjacency(n, std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) {
        throw BudgetError("join order " + std::to_string(n) + " exceeds 64 vertices");
    }
    const int shift = g.order();
    const VertexSet g_side = VertexSet::range(shift);
    const VertexSet h_side = VertexSet::range(n) - g_side;
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < shift; ++v) rows[v] = g.rows()[v] | h_side;
    for (int v = 0; v < h.order(); ++v) {
        rows[shift + v] = VertexSet(h.rows()[v].bits() << shift) | g_side;
    }
    return Graph::from_adjacency(n, std::move(rows));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::singleton(unseen.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.rows()[v];
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen = unseen - comp;
    }
    return out;
}

std::vector<int> component_sizes(const Graph& g) {
    std::vector<int> sizes;
    for (auto c : connected_components(g)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool is_regular(const Graph& g) {
    auto d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

namespace {

class DsaturSearch {
  public:
    explicit DsaturSearch(const Graph& g) : g_(g), n_(g.order()) {
        color_.assign(n_, -1);
        best_ = n_;
        lower_ = greedy_clique();
    }

    int run() {
        if (n_ == 0) return 0;
        std::vector<VertexSet> classes;
        search(0, classes);
        return best_;
    }

  private:
    int greedy_clique() const {
        int best = n_ > 0 ? 1 : 0;
        for (int start = 0; start < n_; ++start) {
            VertexSet cand = g_.rows()[start];
            int size = 1;
            while (!cand.empty()) {
                int pick = -1, pick_deg = -1;
                for (int v : cand) {
                    int d = (g_.rows()[v] & cand).size();
                    if (d > pick_deg) { pick = v; pick_deg = d; }
                }
                ++size;
                cand &= g_.rows()[pick];
            }
            best = std::max(best, size);
        }
        return best;
    }

    void search(int colored, std::vector<VertexSet>& classes) {
        if (best_ == lower_) return;
        if (colored == n_) {
            best_ = std::min(best_, static_cast<int>(classes.size()));
            return;
        }
        // Highest saturation, ties broken by uncolored degree.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        VertexSet uncolored;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] < 0) uncolored = uncolored.with(v);
        }
        for (int v : uncolored) {
            int sat = 0;
            for (auto cls : classes) sat += g_.rows()[v].intersects(cls) ? 1 : 0;
            int deg = (g_.rows()[v] & uncolored).size();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v; pick_sat = sat; pick_deg = deg;
            }
        }
        const int k = static_cast<int>(classes.size());
        for (int c = 0; c < k; ++c) {
            if (g_.rows()[pick].intersects(classes[c])) continue;
            color_[pick] = c;
            classes[c] = classes[c].with(pick);
            search(colored + 1, classes);
            classes[c] = classes[c].without(pick);
            color_[pick] = -1;
            if (best_ == lower_) return;
        }
        if (k + 1 < best_) {
            color_[pick] = k;
            classes.push_back(VertexSet::singleton(pick));
            search(colored + 1, classes);
            classes.pop_back();
            color_[pick] = -1;
        }
    }

    const Graph& g_;
    int n_;
    int best_;
    int lower_;
    std::vector<int> color_;
};

}  // namespace

int chromatic_number(const Graph& g) {
    return DsaturSearch(g).run();
}

}  // namespace dompoly
