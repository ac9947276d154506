#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "glg/graph.hpp"

namespace glg {

/// Raised on malformed graph6 or edge-list input.
class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record (single size byte form, n <= 62).
///
/// Layout: byte 0 is 63+n; each following byte holds six adjacency bits
/// (value byte-63, most significant bit first). The concatenated bit
/// stream lists the upper triangle column-wise: x(0,1), x(0,2), x(1,2),
/// x(0,3), ... Trailing pad bits must be zero.
inline Graph decode_graph6(std::string_view line) {
    if (line.empty()) throw CodecError("graph6: empty record");
    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126)
        throw CodecError("graph6: multi-byte size form (n > 62) is not supported");
    if (size_byte < 63 || size_byte > 126)
        throw CodecError("graph6: size byte out of range [63,126]");
    const int n = size_byte - 63;

    const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() < 1 + nbytes) throw CodecError("graph6: truncated record");
    if (line.size() > 1 + nbytes) throw CodecError("graph6: trailing bytes after record");

    Graph g(n);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(line[1 + b]);
        if (c < 63 || c > 126) throw CodecError("graph6: adjacency byte out of range [63,126]");
        const unsigned value = c - 63;
        for (int j = 0; j < 6; ++j) {
            const bool bit = (value >> (5 - j)) & 1u;
            const std::uint64_t idx = b * 6 + static_cast<std::uint64_t>(j);
            if (idx >= nbits) {
                if (bit) throw CodecError("graph6: nonzero padding bit");
                continue;
            }
            if (bit) {
                auto [u, v] = colex_pair(idx);
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

/// Exact inverse of decode_graph6.
inline std::string encode_graph6(const Graph& g) {
    if (g.n() > 62) throw CodecError("graph6: n > 62 needs the multi-byte size form");
    const int n = g.n();
    std::string out;
    out.push_back(static_cast<char>(63 + n));

    const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    unsigned value = 0;
    int filled = 0;
    for (std::uint64_t idx = 0; idx < nbits; ++idx) {
        auto [u, v] = colex_pair(idx);
        value = (value << 1) | (g.has_edge(u, v) ? 1u : 0u);
        if (++filled == 6) {
            out.push_back(static_cast<char>(63 + value));
            value = 0;
            filled = 0;
        }
    }
    if (filled > 0) {
        value <<= (6 - filled); // zero padding
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

} // namespace glg
