#include "hypo/graph6.hpp"

namespace hypo {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' then 18 bits, big-endian in 6-bit groups.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : s) {
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of range");
    }
    size_t pos = 0;
    long n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: order above 64 unsupported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        pos = 4;
    }
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph6: order out of range 1..64");
    const long bits = n * (n - 1) / 2;
    const size_t expect = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != expect)
        throw std::invalid_argument("graph6: body length mismatch");

    Graph g(static_cast<int>(n));
    long bit = 0;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = s[pos + bit / 6] - 63;
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    for (long b = bits; b < static_cast<long>(expect) * 6; ++b) {
        int c = s[pos + b / 6] - 63;
        if ((c >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace hypo
