#pragma once

#include <cstdint>
#include <optional>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/// Slack used when comparing integer shadow sizes with real binomials.
inline constexpr double kShadowSlack = 1e-6;

/// All (k-1)-subsets of members of f, deduplicated. Requires k >= 1.
SetFamily shadow(const SetFamily& f);

/// All k-subsets of `ground` (members index the host ground set of size n).
SetFamily all_k_subsets(int n, VertexSet ground, int k);

/// x(x-1)...(x-k+1)/k! for real x >= k-1.
double generalized_binomial(double x, int k);

/// The unique x >= k with generalized_binomial(x, k) == family_size, by
/// bisection on [k, k + family_size] run to full double precision.
double solve_x(std::uint64_t family_size, int k);

struct KKReport {
    std::uint64_t family_size;
    int k;
    double x_solved;
    std::uint64_t shadow_size;
    double bound;
    bool bound_met;
    bool equality;
    std::optional<VertexSet> clique_witness;
};

/// Shadow size against the real-binomial lower bound C(x, k-1). equality is
/// set only when the bound is tight, x is an integer, and f is exactly the
/// k-subsets of a round(x)-set (which becomes the witness).
KKReport check_kk(const SetFamily& f);

/// True iff g has no clique on q vertices. q >= 1.
bool is_clique_free(const Graph& g, int q);

/// Edge count of the complete r-partite graph with classes of size a.
std::int64_t turan_max_edges(int r, int a);

/// Same vertex set as g; uv is an edge iff {u, v} dominates g.
Graph dominating_pair_graph(const Graph& g);

}  // namespace dompoly
