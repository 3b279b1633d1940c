#include "somborlike/graph6.hpp"

namespace somborlike {

namespace {

constexpr int kOffset = 63;
constexpr int kLongMarker = 126;   // '~'

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

std::string graph6_encode(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kLongMarker));
        out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kOffset + (n & 63)));
    } else {
        throw std::invalid_argument("graph6 encoding supports order <= 258047 here");
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kOffset + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(kOffset + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (text.size() < pos + k)
            throw Graph6Error("truncated graph6 string", text.size());
    };
    auto byte = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (!printable(c))
            throw Graph6Error("non-printable byte " + std::to_string(int(c)), i);
        return c - kOffset;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(text[0]) == kLongMarker) {
        need(2);
        if (static_cast<unsigned char>(text[1]) == kLongMarker)
            throw Graph6Error("8-byte order form not supported (order > 258047)", 1);
        need(4);
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n < 1)
        throw Graph6Error("graph order must be positive", 0);
    if (n > 258047)
        throw Graph6Error("order out of range", 0);

    const long long nbits_total = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits_total + 5) / 6);
    need(nbytes);
    if (text.size() > pos + nbytes)
        throw Graph6Error("trailing bytes after adjacency data", pos + nbytes);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int row = 0, col = 1;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int v = byte(pos + i);
        for (int b = 5; b >= 0; --b, ++bit) {
            const int set = (v >> b) & 1;
            if (bit >= nbits_total) {
                if (set)
                    throw Graph6Error("nonzero padding bit", pos + i);
                continue;
            }
            if (set)
                g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

} // namespace somborlike
