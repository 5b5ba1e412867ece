#include "dompoly/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>

#include "dompoly/graph6.hpp"

namespace dompoly {

namespace {

using Cells = std::vector<VertexSet>;

// Splits every cell by the number of neighbors in each splitter cell until
// the ordered partition is equitable. Depends only on the ordered partition
// and the graph, so it commutes with relabelling.
void refine(const Graph& g, Cells& cells) {
    const auto& adj = g.rows();
    bool changed = true;
    Cells next;
    std::vector<std::pair<int, int>> keyed;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            const VertexSet splitter = cells[s];
            next.clear();
            bool split_any = false;
            for (const VertexSet cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                keyed.clear();
                for (int v : cell) keyed.emplace_back((adj[v] & splitter).size(), v);
                bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                           [&](auto& kv) { return kv.first == keyed.front().first; });
                if (uniform) {
                    next.push_back(cell);
                    continue;
                }
                std::sort(keyed.begin(), keyed.end());
                VertexSet part;
                int current = keyed.front().first;
                for (auto [count, v] : keyed) {
                    if (count != current) {
                        next.push_back(part);
                        part = VertexSet();
                        current = count;
                    }
                    part = part.with(v);
                }
                next.push_back(part);
                split_any = true;
            }
            if (split_any) {
                cells.swap(next);
                changed = true;
            }
        }
    }
}

struct Leaf {
    std::vector<int> path;
    std::vector<int> labeling;            // vertex -> position
    std::vector<std::uint64_t> rows;      // permuted adjacency, by position
};

class CanonSearch {
  public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        if (n_ == 0) return {Graph(), {}};
        Cells cells{g_.vertices()};
        refine(g_, cells);
        std::vector<int> path;
        dfs(cells, path);
        return {g_.relabel(best_->labeling), best_->labeling};
    }

  private:
    Leaf make_leaf(const Cells& cells, const std::vector<int>& path) const {
        Leaf leaf;
        leaf.path = path;
        leaf.labeling.assign(n_, 0);
        for (std::size_t i = 0; i < cells.size(); ++i) leaf.labeling[cells[i].min()] = static_cast<int>(i);
        leaf.rows.assign(n_, 0);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = 0;
            for (int u : g_.rows()[v]) row |= std::uint64_t{1} << leaf.labeling[u];
            leaf.rows[leaf.labeling[v]] = row;
        }
        return leaf;
    }

    static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    // Maps the vertex at each position of `from` to the vertex at the same
    // position of `to`.
    std::vector<int> automorphism(const Leaf& from, const Leaf& to) const {
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[to.labeling[v]] = v;
        std::vector<int> gamma(n_);
        for (int v = 0; v < n_; ++v) gamma[v] = inv[from.labeling[v]];
        return gamma;
    }

    // Returns the depth the search should resume at; a value below the
    // caller's depth means the caller's subtree is already covered.
    std::size_t dfs(const Cells& cells, std::vector<int>& path) {
        const std::size_t depth = path.size();
        if (cells.size() == static_cast<std::size_t>(n_)) return visit_leaf(make_leaf(cells, path));

        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int sz = cells[i].size();
            if (sz > 1 && (target == cells.size() || sz < cells[target].size())) target = i;
        }

        std::vector<int> explored;
        for (int v : cells[target]) {
            if (!explored.empty() && same_orbit_as_explored(path, v, explored)) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    child.push_back(VertexSet::singleton(v));
                    child.push_back(cells[i].without(v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            refine(g_, child);
            path.push_back(v);
            std::size_t resume = dfs(child, path);
            path.pop_back();
            explored.push_back(v);
            if (resume < depth) return resume;
        }
        return depth;
    }

    std::size_t visit_leaf(Leaf leaf) {
        const std::size_t depth = leaf.path.size();
        if (!first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            return depth;
        }
        if (leaf.rows == first_->rows) {
            generators_.push_back(automorphism(*first_, leaf));
            return common_prefix(leaf.path, first_->path);
        }
        if (leaf.rows > best_->rows) {
            best_ = std::move(leaf);
            return depth;
        }
        if (leaf.rows == best_->rows) {
            generators_.push_back(automorphism(*best_, leaf));
            return common_prefix(leaf.path, best_->path);
        }
        return depth;
    }

    bool same_orbit_as_explored(const std::vector<int>& path, int v, const std::vector<int>& explored) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : generators_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; });
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(gamma[x]);
                if (a != b) parent[a] = b;
            }
        }
        int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    const Graph& g_;
    int n_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    return CanonSearch(g).run();
}

std::string canonical_key(const Graph& g) {
    Graph canon = canonical_form(g).graph;
    if (canon.order() <= kGraph6MaxOrder) return to_graph6(canon);
    std::string key = std::to_string(canon.order()) + ":";
    char buf[20];
    for (auto row : canon.rows()) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(row.bits()));
        key += buf;
    }
    return key;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g).graph == canonical_form(h).graph;
}

}  // namespace dompoly
