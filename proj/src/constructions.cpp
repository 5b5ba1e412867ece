#include "dompoly/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace dompoly {

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error("partition spec needs at least one part");
    long total = 0;
    for (int a : parts_) {
        if (a < 1) throw Error("partition part " + std::to_string(a) + " must be >= 1");
        total += a;
    }
    if (total > kMaxVertices) throw BudgetError("partition order " + std::to_string(total) + " exceeds 64");
    std::sort(parts_.begin(), parts_.end());
}

int PartitionSpec::order() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string PartitionSpec::to_string() const {
    std::string out = "K(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& cur, std::vector<PartitionSpec>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = min_part; p <= remaining; ++p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PartitionSpec> partitions_of(int n) {
    std::vector<PartitionSpec> out;
    if (n < 1) return out;
    std::vector<int> cur;
    partitions_rec(n, 1, cur, out);
    return out;
}

Graph complete_multipartite(const PartitionSpec& spec) {
    const int n = spec.order();
    std::vector<VertexSet> rows(n);
    const VertexSet all = VertexSet::range(n);
    int start = 0;
    for (int a : spec.parts()) {
        VertexSet block = VertexSet::range(start + a) - VertexSet::range(start);
        for (int v : block) rows[v] = all - block;
        start += a;
    }
    return Graph::from_adjacency(n, std::move(rows));
}

Graph equipartite(int r, int a) {
    if (r < 0 || a < 1) throw Error("equipartite requires r >= 0 and a >= 1");
    if (r * a > kMaxVertices) throw BudgetError("equipartite order " + std::to_string(r * a) + " exceeds 64");
    if (r == 0) return Graph();
    return complete_multipartite(PartitionSpec(std::vector<int>(r, a)));
}

Graph h_graph(int a, int t) {
    if (a < 1) throw Error("H(a,t) requires a >= 1");
    if (t != 0 && t != 1) throw Error("H(a,t) requires t in {0,1}");
    const int n = 2 * a + t;
    if (n > kMaxVertices) throw BudgetError("H(a,t) order exceeds 64");
    const VertexSet left = VertexSet::range(a);
    const VertexSet right = VertexSet::range(n) - left;
    std::vector<VertexSet> rows(n);
    for (int v : left) rows[v] = left.without(v).with(a + v);
    for (int v : right) rows[v] = right.without(v);
    for (int i = 0; i < a; ++i) rows[a + i] = rows[a + i].with(i);
    return Graph::from_adjacency(n, std::move(rows));
}

Graph j_graph(int r, int a, int t) {
    if (r < 2) throw Error("J(r,a,t) requires r >= 2");
    if (a < 1) throw Error("J(r,a,t) requires a >= 1");
    if (t < 0 || t > r / 2) throw Error("J(r,a,t) requires 0 <= t <= r/2");
    if (r * a > kMaxVertices) throw BudgetError("J(r,a,t) order exceeds 64");
    std::vector<Graph> parts(t, h_graph(a, 0));
    parts.push_back(equipartite(r - 2 * t, a));
    return join_all(parts);
}

Graph join_all(const std::vector<Graph>& graphs) {
    Graph acc;
    for (const auto& g : graphs) acc = join(acc, g);
    return acc;
}

namespace {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
        }
    }

    Graph parse() {
        Graph g = expr();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return g;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("construction '" + src_ + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    bool accept(std::string_view tok) {
        if (src_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        int value = 0;
        auto first = src_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, src_.data() + src_.size(), value);
        if (ec != std::errc() || ptr == first) fail("expected integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::vector<int> int_args() {
        expect('(');
        std::vector<int> args{integer()};
        while (pos_ < src_.size() && src_[pos_] == ',') {
            ++pos_;
            args.push_back(integer());
        }
        expect(')');
        return args;
    }

    std::vector<int> fixed_args(std::size_t count, const char* form) {
        auto args = int_args();
        if (args.size() != count) fail(std::string("expected ") + form);
        return args;
    }

    Graph expr() {
        try {
            if (accept("join")) {
                expect('(');
                std::vector<Graph> parts{expr()};
                while (pos_ < src_.size() && src_[pos_] == ';') {
                    ++pos_;
                    parts.push_back(expr());
                }
                expect(')');
                return join_all(parts);
            }
            if (accept("Kr")) {
                auto args = fixed_args(2, "Kr(r,a)");
                return equipartite(args[0], args[1]);
            }
            if (accept("K")) return complete_multipartite(PartitionSpec(int_args()));
            if (accept("H")) {
                auto args = fixed_args(2, "H(a,t)");
                return h_graph(args[0], args[1]);
            }
            if (accept("J")) {
                auto args = fixed_args(3, "J(r,a,t)");
                return j_graph(args[0], args[1], args[2]);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const BudgetError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what());
        }
        fail("unknown construction");
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_construction(std::string_view expr) {
    return ExprParser(expr).parse();
}

}  // namespace dompoly
