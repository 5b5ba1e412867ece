#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

/// Base class for every error raised by the library. The CLI maps these to
/// exit status 2.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed a fixed size budget (vertex cap, brute-force
/// order, family materialization limit).
class BudgetError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input (graph6, construction expressions, family files).
class ParseError : public Error {
  public:
    using Error::Error;
};

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices in [0, 64), one bit per vertex.
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    class iterator {
      public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

      private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

  private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices.
///
/// adjacency(v) is the open neighborhood of v. Symmetry, loop-freeness and
/// the absence of bits at or above order() are checked on construction.
class Graph {
  public:
    /// The empty graph (no vertices).
    Graph() = default;

    /// Validates the rows and throws Error on any invariant violation.
    static Graph from_adjacency(int n, std::vector<VertexSet> rows);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph edgeless(int n);

    int order() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { check_vertex(v); return adj_[v]; }
    bool has_edge(int u, int v) const { check_vertex(u); check_vertex(v); return adj_[u].contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    /// Minimum degree; 0 for the empty graph.
    int min_degree() const;
    std::vector<int> degrees() const;
    std::vector<std::pair<int, int>> edges() const;
    const std::vector<VertexSet>& rows() const { return adj_; }

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing
    /// vertex order.
    Graph induced(VertexSet keep) const;
    Graph delete_vertex(int v) const;
    /// Vertex v of this graph becomes vertex perm[v] of the result.
    Graph relabel(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

  private:
    Graph(int n, std::vector<VertexSet> rows) : n_(n), adj_(std::move(rows)) {}
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

VertexSet closed_neighborhood(const Graph& g, int v);
/// V \ N[v]: the vertices v does not dominate.
VertexSet nonneighbor_set(const Graph& g, int v);

Graph complement(const Graph& g);
/// Disjoint union of g and h plus every edge between them. g keeps labels
/// 0..g.order()-1, h is shifted up by g.order().
Graph join(const Graph& g, const Graph& h);
/// Maximal connected vertex sets, ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Sorted ascending component sizes.
std::vector<int> component_sizes(const Graph& g);
bool is_regular(const Graph& g);

/// Exact chromatic number by DSATUR branch and bound. Intended for n <= 16.
int chromatic_number(const Graph& g);

}  // namespace dompoly
