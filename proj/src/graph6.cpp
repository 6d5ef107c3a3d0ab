#include "tough/graph6.hpp"

#include <vector>

namespace tough {

namespace {

constexpr int bias = 63;

int decode_byte(char c, std::size_t pos)
{
    int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw Graph6Error("graph6: byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                          " outside 63..126");
    return b - bias;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty()) throw Graph6Error("graph6: empty string");
    std::size_t pos = 0;
    std::size_t n = 0;
    int first = decode_byte(text[0], 0);
    if (first < 63) {
        n = static_cast<std::size_t>(first);
        pos = 1;
    } else {
        if (text.size() < 4) throw Graph6Error("graph6: truncated order header");
        if (text[1] == '~') throw Graph6Error("graph6: orders above 258047 are not supported");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(decode_byte(text[k], k));
        if (n < 63) throw Graph6Error("graph6: non-minimal order header");
        pos = 4;
    }
    if (n > VertexSet::max_vertices) throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds 512");

    std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Graph6Error("graph6: expected " + std::to_string(bytes) + " data bytes for order " + std::to_string(n) +
                          ", got " + std::to_string(text.size() - pos));

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int group = decode_byte(text[pos + k / 6], pos + k / 6);
            if ((group >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    for (; k < bytes * 6; ++k) {
        int group = decode_byte(text[pos + k / 6], pos + k / 6);
        if ((group >> (5 - k % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g)
{
    std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
    }
    int group = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + bias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + bias));
    return out;
}

}  // namespace tough
