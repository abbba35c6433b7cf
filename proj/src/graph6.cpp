#include "isix/graph6.hpp"

#include <stdexcept>

namespace isix {

std::string encode_g6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("encode_g6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bit = 5;
    unsigned char chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) chunk |= static_cast<unsigned char>(1u << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(chunk + 63));
    return out;
}

Graph decode_g6(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("decode_g6: empty line");
    for (char c : line) {
        if (c < 63 || c > 126) throw std::invalid_argument("decode_g6: malformed character");
    }
    int n = line[0] - 63;
    if (n > 62) throw std::invalid_argument("decode_g6: only n <= 62 supported");
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(line.size()) != 1 + nbytes)
        throw std::invalid_argument("decode_g6: length mismatch");
    std::vector<std::pair<int, int>> pairs;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = line[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
        }
    }
    // Padding bits must be zero so the encoding is one-to-one.
    for (; k < nbytes * 6; ++k) {
        int byte = line[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw std::invalid_argument("decode_g6: nonzero padding bits");
    }
    return Graph::from_edges(n, pairs);
}

}  // namespace isix
