#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "dompoly/constructions.hpp"
#include "dompoly/graph.hpp"

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Largest order polynomial_bruteforce accepts.
inline constexpr int kBruteForceMaxOrder = 28;
/// Largest C(n,k) nondominating_sets will materialize.
inline constexpr long long kFamilyLimit = 10'000'000;

/// Domination polynomial of an order-n graph: coeffs()[i] counts the
/// dominating sets of size i. The empty graph has the single coefficient 0.
class Polynomial {
  public:
    Polynomial() : coeffs_(1) {}

    /// Checks the invariants every domination polynomial satisfies:
    /// length n+1, d(0)=0 and d(n)=1 for n >= 1, 0 <= d(i) <= C(n,i), and
    /// d(i) = C(n,i) implies d(j) = C(n,j) for all j >= i.
    static Polynomial from_coefficients(int n, std::vector<BigInt> coeffs);

    int order() const { return n_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// "x^5+5x^4+10x^3+7x^2": descending powers, zero terms omitted,
    /// unit coefficients elided, "0" for the zero polynomial.
    std::string to_string() const;
    /// Comma-separated decimal coefficients from degree 0 upwards.
    std::string key() const;

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    /// Total order: by order, then coefficient-wise from degree 0.
    bool operator<(const Polynomial& o) const;

  private:
    Polynomial(int n, std::vector<BigInt> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}
    friend Polynomial make_polynomial_unchecked(int n, std::vector<BigInt> coeffs);

    int n_ = 0;
    std::vector<BigInt> coeffs_;
};

/// k-uniform family of distinct vertex subsets of a ground set of size n,
/// kept sorted by bitmask.
class SetFamily {
  public:
    SetFamily(int ground, int k, std::vector<VertexSet> sets);

    int ground() const { return ground_; }
    int k() const { return k_; }
    const std::vector<VertexSet>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool contains(VertexSet s) const;

    bool operator==(const SetFamily&) const = default;

  private:
    int ground_;
    int k_;
    std::vector<VertexSet> sets_;
};

bool is_dominating(const Graph& g, VertexSet s);

/// Counts dominating sets by scanning all 2^n subsets in increasing mask
/// order, with neighborhood unions built incrementally from two half
/// tables. Throws BudgetError above kBruteForceMaxOrder. `threads` = 0
/// uses default_thread_count(); the result does not depend on it.
Polynomial polynomial_bruteforce(const Graph& g, unsigned threads = 0);

/// D(G v H) from D(G) and D(H):
/// ((1+x)^|G| - 1)((1+x)^|H| - 1) + D(G) + D(H).
Polynomial polynomial_join(const Polynomial& pg, const Polynomial& ph);

/// Splits g into join factors (components of the complement), brute
/// forces each and combines them with polynomial_join. Throws BudgetError
/// when a factor is larger than kBruteForceMaxOrder.
Polynomial polynomial(const Graph& g, unsigned threads = 0);

/// d(i) = C(n,i) - sum over parts a with i < a of C(a,i), for i >= 1.
Polynomial multipartite_closed_form(const PartitionSpec& spec);

/// Every k-subset that fails to dominate g.
SetFamily nondominating_sets(const Graph& g, int k);

struct MinDegreeRecovery {
    int ell;    ///< least j with d(j) = C(n,j)
    int delta;  ///< n - ell, the minimum degree of every graph with this polynomial
};

MinDegreeRecovery min_degree_from_polynomial(const Polynomial& p);

/// C(n, ell-1) - d(ell-1): a lower bound on the number of minimum-degree
/// vertices in any graph with polynomial p.
BigInt forced_min_degree_count(const Polynomial& p);

}  // namespace dompoly
