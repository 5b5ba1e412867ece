#include "dompoly/graph6.hpp"

namespace dompoly {

namespace {

constexpr int kOffset = 63;

std::string_view strip_line_end(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    text = strip_line_end(text);
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6: character code " + std::to_string(static_cast<int>(c)) +
                             " outside 63..126");
        }
    }
    if (text.front() == '~') {
        throw ParseError("graph6: long-form header (order > 62) is not supported");
    }
    const int n = text.front() - kOffset;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " characters for order " +
                         std::to_string(n) + ", got " + std::to_string(text.size()));
    }

    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    auto bit_at = [&](std::size_t idx) {
        int word = text[1 + idx / 6] - kOffset;
        return (word >> (5 - idx % 6)) & 1;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bit_at(k)) edges.emplace_back(i, j);
        }
    }
    for (std::size_t pad = bits; pad < (expected - 1) * 6; ++pad) {
        if (bit_at(pad)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw BudgetError("graph6: order " + std::to_string(n) + " exceeds short-form limit 62");
    }
    std::string out(1, static_cast<char>(n + kOffset));
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.rows()[i].contains(j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kOffset));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kOffset));
    return out;
}

Graph6Reader::Graph6Reader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw ParseError("cannot open graph6 file '" + path + "'");
}

std::optional<Graph> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        auto body = strip_line_end(line);
        if (body.empty()) continue;
        Graph g;
        try {
            g = from_graph6(body);
        } catch (const Error& e) {
            throw ParseError(path_ + ":" + std::to_string(line_no_) + ": " + e.what());
        }
        if (order_ && *order_ != g.order()) {
            throw ParseError(path_ + ":" + std::to_string(line_no_) + ": order " +
                             std::to_string(g.order()) + " differs from corpus order " +
                             std::to_string(*order_));
        }
        order_ = g.order();
        return g;
    }
    return std::nullopt;
}

}  // namespace dompoly
