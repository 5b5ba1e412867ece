#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include "dompoly/graph.hpp"

namespace dompoly {

/// Largest order representable in the graph6 short form.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line (short form only). A trailing newline or
/// carriage return is ignored. Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

/// Encodes g in graph6 short form, without a trailing newline. Throws
/// BudgetError when g.order() > 62.
std::string to_graph6(const Graph& g);

/// Streams graphs from a graph6 file, one per line. Every graph must have
/// the same order; a decode failure or order change throws ParseError
/// naming the line. Blank lines are skipped.
class Graph6Reader {
  public:
    explicit Graph6Reader(const std::string& path);

    std::optional<Graph> next();
    std::size_t line_number() const { return line_no_; }
    /// Order of the first graph read, if any.
    std::optional<int> order() const { return order_; }

  private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
    std::optional<int> order_;
};

}  // namespace dompoly
