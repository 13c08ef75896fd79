#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Errors raised by the graph6 codec. `kind()` identifies the failure so
/// callers can distinguish malformed bytes from unsupported inputs.
class graph6_error : public std::runtime_error {
public:
    enum class Kind {
        byte_out_of_range,
        truncated_payload,
        nonzero_padding,
        order_overflow,
        wrong_format, // sparse6 / digraph6 / unknown header
    };

    graph6_error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Decode one graph6 line (optionally prefixed by ">>graph6<<").
/// Trailing '\n' or '\r' is tolerated; any other byte outside 63..126 throws.
Graph parse_graph6(std::string_view text);

/// Encode without header. Orders up to 258047 are supported.
std::string write_graph6(const Graph& g);

} // namespace nutkit
