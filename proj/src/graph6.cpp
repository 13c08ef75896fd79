#include "nutkit/graph6.hpp"

namespace nutkit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr long kMaxOrder = 258047; // largest order of the 3-byte form

} // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.substr(0, 11) == ">>sparse6<<" || (!text.empty() && text.front() == ':'))
        throw graph6_error(graph6_error::Kind::wrong_format,
                           "sparse6 input detected; only graph6 is supported");
    if (text.substr(0, 12) == ">>digraph6<<" || (!text.empty() && text.front() == '&'))
        throw graph6_error(graph6_error::Kind::wrong_format,
                           "digraph6 input detected; only graph6 is supported");
    if (text.empty())
        throw graph6_error(graph6_error::Kind::truncated_payload, "empty graph6 string");

    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw graph6_error(graph6_error::Kind::byte_out_of_range,
                               "graph6 byte outside 63..126");

    std::size_t pos = 0;
    long n;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 2 && text[1] == 126) {
        throw graph6_error(graph6_error::Kind::order_overflow,
                           "8-byte order encoding (n > 258047) is not supported");
    } else {
        if (text.size() < 4)
            throw graph6_error(graph6_error::Kind::truncated_payload, "truncated order bytes");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
        pos = 4;
    }

    const long bits_needed = n * (n - 1) / 2;
    const long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < bytes_needed)
        throw graph6_error(graph6_error::Kind::truncated_payload,
                           "fewer adjacency bits than n(n-1)/2");
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > bytes_needed)
        throw graph6_error(graph6_error::Kind::truncated_payload,
                           "trailing bytes after adjacency payload");

    std::vector<Edge> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long b = bits_needed; b < bytes_needed * 6; ++b) {
        int byte = text[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw graph6_error(graph6_error::Kind::nonzero_padding, "padding bits set");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    const long n = g.order();
    if (n > kMaxOrder)
        throw graph6_error(graph6_error::Kind::order_overflow,
                           "orders above 258047 are not supported");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, static_cast<int>(j)) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

} // namespace nutkit
