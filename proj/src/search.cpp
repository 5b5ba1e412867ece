#include "dompoly/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dompoly/canonical.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/parallel.hpp"

namespace dompoly {

namespace {

void check_corpus_order(int order, std::span<const Graph> corpus) {
    for (const auto& h : corpus) {
        if (h.order() != order) {
            throw Error("corpus order " + std::to_string(h.order()) + " does not match graph order " +
                        std::to_string(order));
        }
    }
}

std::vector<Graph> graphs_from_keys(const std::set<std::string>& keys) {
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(from_graph6(k));
    return out;
}

}  // namespace

bool ClassReport::contains(const Graph& g) const {
    if (g.order() != polynomial.order()) return false;
    return std::binary_search(members.begin(), members.end(), canonical_key(g));
}

const ClassReport* Atlas::find(const Polynomial& p) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), p,
                               [](const ClassReport& c, const Polynomial& q) { return c.polynomial < q; });
    if (it == classes.end() || !(it->polynomial == p)) return nullptr;
    return &*it;
}

std::vector<Graph> enumerate_graphs(int n, unsigned threads) {
    if (n < 0) throw Error("order must be >= 0");
    if (n > kEnumerateMaxOrder) {
        throw BudgetError("built-in enumeration is limited to order 7; ingest an external corpus for order " +
                          std::to_string(n));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    const std::size_t labeled = std::size_t{1} << pairs.size();
    if (threads == 0) threads = default_thread_count();
    std::vector<std::set<std::string>> found(threads);
    parallel_ranges(labeled, threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
        std::vector<VertexSet> rows(n);
        for (std::size_t mask = begin; mask < end; ++mask) {
            std::fill(rows.begin(), rows.end(), VertexSet());
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                if ((mask >> b) & 1U) {
                    auto [u, v] = pairs[b];
                    rows[u] = rows[u].with(v);
                    rows[v] = rows[v].with(u);
                }
            }
            // Every class has a labelling with non-decreasing degrees.
            bool sorted = true;
            for (int v = 1; v < n && sorted; ++v) sorted = rows[v - 1].size() <= rows[v].size();
            if (!sorted) continue;
            found[worker].insert(canonical_key(Graph::from_adjacency(n, rows)));
        }
    });
    std::set<std::string> keys;
    for (auto& f : found) keys.merge(f);
    return graphs_from_keys(keys);
}

std::vector<Graph> extend_by_vertex(std::span<const Graph> reps, unsigned threads) {
    if (reps.empty()) return {};
    const int n = reps.front().order();
    check_corpus_order(n, reps);
    if (n + 1 > kMaxVertices) throw BudgetError("extension beyond 64 vertices");
    if (threads == 0) threads = default_thread_count();
    std::vector<std::set<std::string>> found(threads);
    parallel_ranges(reps.size(), threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
        std::vector<VertexSet> rows(n + 1);
        for (std::size_t r = begin; r < end; ++r) {
            const Graph& base = reps[r];
            const std::uint64_t masks = std::uint64_t{1} << n;
            for (std::uint64_t m = 0; m < masks; ++m) {
                const VertexSet nbrs(m);
                const int deg = nbrs.size();
                bool max_degree = true;
                for (int v = 0; v < n && max_degree; ++v) {
                    max_degree = base.rows()[v].size() + (nbrs.contains(v) ? 1 : 0) <= deg;
                }
                if (!max_degree) continue;
                for (int v = 0; v < n; ++v) rows[v] = nbrs.contains(v) ? base.rows()[v].with(n) : base.rows()[v];
                rows[n] = nbrs;
                found[worker].insert(canonical_key(Graph::from_adjacency(n + 1, rows)));
            }
        }
    });
    std::set<std::string> keys;
    for (auto& f : found) keys.merge(f);
    return graphs_from_keys(keys);
}

std::vector<Graph> exhaustive_corpus(int n, unsigned threads) {
    if (n < 0) throw Error("order must be >= 0");
    if (n > kExtensionMaxOrder) {
        throw BudgetError("exhaustive corpus generation is limited to order " + std::to_string(kExtensionMaxOrder));
    }
    std::vector<Graph> reps{Graph()};
    for (int k = 0; k < n; ++k) reps = extend_by_vertex(reps, threads);
    return reps;
}

std::vector<Graph> ingest_graph6(const std::string& path) {
    Graph6Reader reader(path);
    std::vector<Graph> out;
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

Atlas build_atlas(std::span<const Graph> corpus, unsigned threads) {
    Atlas atlas;
    if (corpus.empty()) return atlas;
    atlas.order = corpus.front().order();
    check_corpus_order(atlas.order, corpus);

    std::vector<std::string> keys(corpus.size());
    std::vector<Polynomial> polys(corpus.size());
    parallel_ranges(corpus.size(), threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            keys[i] = canonical_key(corpus[i]);
            polys[i] = polynomial(corpus[i], 1);
        }
    });

    std::map<Polynomial, std::set<std::string>> buckets;
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        buckets[polys[i]].insert(keys[i]);
        distinct.insert(keys[i]);
    }
    atlas.total_graphs = distinct.size();
    for (auto& [poly, members] : buckets) {
        atlas.classes.push_back({poly, std::vector<std::string>(members.begin(), members.end())});
    }
    return atlas;
}

ClassReport equivalence_class(const Graph& g, std::span<const Graph> corpus) {
    check_corpus_order(g.order(), corpus);
    const Polynomial target = polynomial(g);
    std::set<std::string> members{canonical_key(g)};
    for (const auto& h : corpus) {
        if (polynomial(h, 1) == target) members.insert(canonical_key(h));
    }
    return {target, std::vector<std::string>(members.begin(), members.end())};
}

VerificationOutcome verify_unique_in_corpus(const Graph& g, std::span<const Graph> corpus) {
    const ClassReport cls = equivalence_class(g, corpus);
    const std::string self = canonical_key(g);
    VerificationOutcome out;
    out.claim_id = "unique";
    out.parameters = {g.order()};
    out.passed = cls.size() == 1;
    out.evidence["graph"] = self;
    out.evidence["polynomial"] = cls.polynomial.to_string();
    out.evidence["corpus_size"] = corpus.size();
    out.evidence["class_size"] = cls.size();
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& m : cls.members) {
        if (m != self) witnesses.push_back(m);
    }
    out.evidence["witnesses"] = witnesses;
    return out;
}

}  // namespace dompoly
