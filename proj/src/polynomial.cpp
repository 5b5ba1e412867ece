#include "dompoly/polynomial.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "dompoly/parallel.hpp"

namespace dompoly {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Polynomial make_polynomial_unchecked(int n, std::vector<BigInt> coeffs) {
    return Polynomial(n, std::move(coeffs));
}

Polynomial Polynomial::from_coefficients(int n, std::vector<BigInt> coeffs) {
    if (n < 0 || n > kMaxVertices) throw Error("polynomial order outside [0, 64]");
    if (static_cast<int>(coeffs.size()) != n + 1) {
        throw Error("polynomial of order " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    if (coeffs[0] != 0) throw Error("constant coefficient must be 0");
    if (n >= 1 && coeffs[n] != 1) throw Error("leading coefficient must be 1");
    bool saturated = false;
    for (int i = 0; i <= n; ++i) {
        const BigInt full = binomial(n, i);
        if (coeffs[i] < 0 || coeffs[i] > full) {
            throw Error("coefficient " + std::to_string(i) + " outside [0, C(n,i)]");
        }
        if (saturated && coeffs[i] != full) {
            throw Error("coefficient " + std::to_string(i) + " breaks superset closure of dominating sets");
        }
        saturated = saturated || (n >= 1 && coeffs[i] == full);
    }
    return Polynomial(n, std::move(coeffs));
}

std::string Polynomial::to_string() const {
    std::string out;
    for (int i = n_; i >= 1; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (c != 1) out += c.str();
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string Polynomial::key() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += coeffs_[i].str();
    }
    return out;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(), o.coeffs_.end());
}

SetFamily::SetFamily(int ground, int k, std::vector<VertexSet> sets)
    : ground_(ground), k_(k), sets_(std::move(sets)) {
    if (ground < 0 || ground > kMaxVertices) throw Error("family ground set size outside [0, 64]");
    if (k < 0 || k > ground) throw Error("family cardinality outside [0, ground]");
    const VertexSet all = VertexSet::range(ground);
    for (auto s : sets_) {
        if (s.size() != k) throw Error("family member has size " + std::to_string(s.size()) + ", expected " + std::to_string(k));
        if (!s.subset_of(all)) throw Error("family member outside ground set");
    }
    std::sort(sets_.begin(), sets_.end());
    if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) throw Error("family has duplicate members");
}

bool SetFamily::contains(VertexSet s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool is_dominating(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw Error("vertex set outside graph");
    VertexSet covered = s;
    for (int v : s) covered |= g.rows()[v];
    return covered == g.vertices();
}

Polynomial polynomial_bruteforce(const Graph& g, unsigned threads) {
    const int n = g.order();
    if (n > kBruteForceMaxOrder) {
        throw BudgetError("brute-force domination polynomial limited to order " +
                          std::to_string(kBruteForceMaxOrder) + ", got " + std::to_string(n));
    }
    if (n == 0) return Polynomial();

    // Subset mask = (high << lo_bits) | low; both halves carry a table of
    // closed-neighborhood unions built from the mask with its lowest bit
    // cleared.
    const int lo_bits = std::min(n, 12);
    const int hi_bits = n - lo_bits;
    const std::uint64_t full = g.vertices().bits();

    auto cover_table = [&](int offset, int bits) {
        std::vector<std::uint64_t> table(std::size_t{1} << bits);
        for (std::size_t m = 1; m < table.size(); ++m) {
            int v = offset + std::countr_zero(m);
            table[m] = table[m & (m - 1)] | closed_neighborhood(g, v).bits();
        }
        return table;
    };
    const auto lo_cover = cover_table(0, lo_bits);
    const auto hi_cover = cover_table(lo_bits, hi_bits);
    std::vector<std::uint8_t> lo_pop(lo_cover.size());
    for (std::size_t m = 0; m < lo_pop.size(); ++m) lo_pop[m] = static_cast<std::uint8_t>(std::popcount(m));

    if (threads == 0) threads = default_thread_count();
    std::vector<std::array<std::uint64_t, kMaxVertices + 1>> partial(threads);
    for (auto& p : partial) p.fill(0);
    parallel_ranges(hi_cover.size(), threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
        auto& counts = partial[worker];
        for (std::size_t h = begin; h < end; ++h) {
            const std::uint64_t need = full & ~hi_cover[h];
            const int base = std::popcount(h);
            for (std::size_t l = 0; l < lo_cover.size(); ++l) {
                if ((lo_cover[l] & need) == need) ++counts[base + lo_pop[l]];
            }
        }
    });

    std::vector<BigInt> coeffs(n + 1);
    for (const auto& p : partial) {
        for (int i = 0; i <= n; ++i) coeffs[i] += p[i];
    }
    return make_polynomial_unchecked(n, std::move(coeffs));
}

Polynomial polynomial_join(const Polynomial& pg, const Polynomial& ph) {
    const int ng = pg.order(), nh = ph.order();
    const int n = ng + nh;
    if (n > kMaxVertices) throw BudgetError("join order " + std::to_string(n) + " exceeds 64");
    std::vector<BigInt> coeffs(n + 1);
    for (int j = 1; j <= ng; ++j) {
        const BigInt cg = binomial(ng, j);
        for (int m = 1; m <= nh; ++m) coeffs[j + m] += cg * binomial(nh, m);
    }
    for (int i = 0; i <= ng; ++i) coeffs[i] += pg.coeff(i);
    for (int i = 0; i <= nh; ++i) coeffs[i] += ph.coeff(i);
    return make_polynomial_unchecked(n, std::move(coeffs));
}

Polynomial polynomial(const Graph& g, unsigned threads) {
    const auto factors = connected_components(complement(g));
    for (auto f : factors) {
        if (f.size() > kBruteForceMaxOrder) {
            throw BudgetError("join-irreducible factor of order " + std::to_string(f.size()) +
                              " exceeds brute-force limit " + std::to_string(kBruteForceMaxOrder));
        }
    }
    Polynomial acc;
    for (auto f : factors) acc = polynomial_join(acc, polynomial_bruteforce(g.induced(f), threads));
    return acc;
}

Polynomial multipartite_closed_form(const PartitionSpec& spec) {
    const int n = spec.order();
    std::vector<BigInt> coeffs(n + 1);
    for (int i = 1; i <= n; ++i) {
        BigInt c = binomial(n, i);
        for (int a : spec.parts()) {
            if (i < a) c -= binomial(a, i);
        }
        coeffs[i] = c;
    }
    return make_polynomial_unchecked(n, std::move(coeffs));
}

SetFamily nondominating_sets(const Graph& g, int k) {
    const int n = g.order();
    if (n > kBruteForceMaxOrder) throw BudgetError("non-dominating family limited to order 28");
    if (k < 0 || k > n) throw Error("k must lie in [0, n]");
    if (binomial(n, k) > kFamilyLimit) {
        throw BudgetError("C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds family limit 10^7");
    }
    std::vector<VertexSet> sets;
    if (k == 0) {
        if (!is_dominating(g, VertexSet())) sets.emplace_back();
        return SetFamily(n, 0, std::move(sets));
    }
    // Gosper's hack over k-subsets of an n-set.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit;) {
        if (!is_dominating(g, VertexSet(m))) sets.emplace_back(m);
        std::uint64_t c = m & (~m + 1);
        std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return SetFamily(n, k, std::move(sets));
}

MinDegreeRecovery min_degree_from_polynomial(const Polynomial& p) {
    const int n = p.order();
    if (n < 1) throw Error("minimum degree is undefined for the empty graph");
    for (int j = 1; j <= n; ++j) {
        if (p.coeff(j) == binomial(n, j)) return {j, n - j};
    }
    throw Error("no saturated coefficient: not a domination polynomial");
}

BigInt forced_min_degree_count(const Polynomial& p) {
    const int ell = min_degree_from_polynomial(p).ell;
    return binomial(p.order(), ell - 1) - p.coeff(ell - 1);
}

}  // namespace dompoly
