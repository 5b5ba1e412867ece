#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

/// Color-class sizes (a_1, ..., a_r) of a complete multipartite graph,
/// normalized to ascending order. Every part is >= 1 and the total is <= 64.
class PartitionSpec {
  public:
    explicit PartitionSpec(std::vector<int> parts);
    PartitionSpec(std::initializer_list<int> parts) : PartitionSpec(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int classes() const { return static_cast<int>(parts_.size()); }
    int order() const;
    std::string to_string() const;

    bool operator==(const PartitionSpec&) const = default;

  private:
    std::vector<int> parts_;
};

/// All partitions of n into positive parts, each ascending, in
/// lexicographic order.
std::vector<PartitionSpec> partitions_of(int n);

/// Vertices come in consecutive blocks of the (sorted) part sizes; two
/// vertices are adjacent iff they lie in different blocks.
Graph complete_multipartite(const PartitionSpec& spec);

/// r classes of size a; r = 0 gives the empty graph.
Graph equipartite(int r, int a);

/// K_a on vertices 0..a-1, K_{a+t} on a..2a+t-1, and the matching
/// (i, a+i) for i < a.
Graph h_graph(int a, int t);

/// t copies of h_graph(a, 0) joined with equipartite(r - 2t, a), copies
/// first. Requires r >= 2 and 0 <= t <= r/2.
Graph j_graph(int r, int a, int t);

/// Left fold of join; the empty list gives the empty graph.
Graph join_all(const std::vector<Graph>& graphs);

/// Parses a construction expression:
///   K(a1,...,ar) | Kr(r,a) | H(a,t) | J(r,a,t) | join(expr;expr;...)
/// Whitespace is ignored. Throws ParseError on malformed input.
Graph parse_construction(std::string_view expr);

}  // namespace dompoly
