#include "cyclesat/graph6.hpp"

namespace cyclesat {

namespace {
constexpr int kBias = 63;

int decode_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("graph6: byte out of range");
    return b - kBias;
}
}  // namespace

Graph parse_graph6(std::string_view text) {
    // Tolerate a trailing newline so graph6 lines can be piped verbatim.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("graph6: 8-byte order form not supported");
        if (text.size() < 4) throw Graph6Error("graph6: truncated order field");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | decode_byte(text[pos]);
    } else {
        n = decode_byte(text[0]);
        pos = 1;
    }
    if (n > 100000) throw Graph6Error("graph6: order too large");

    long long bits = n * (n - 1) / 2;
    std::size_t expect = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expect)
        throw Graph6Error("graph6: malformed length (expected " + std::to_string(expect) +
                          " data bytes, got " + std::to_string(text.size() - pos) + ")");

    Graph g = Graph::empty(static_cast<int>(n));
    GraphBuilder b(static_cast<int>(n));
    long long idx = 0;
    int cur = 0, have = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++idx) {
            if (have == 0) {
                cur = decode_byte(text[pos++]);
                have = 6;
            }
            if (cur & (1 << (have - 1))) b.add_edge(row, col);
            --have;
        }
    }
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw Graph6Error("graph6: nonzero padding bits");
    return b.take();
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw Graph6Error("graph6: order too large to emit");
    }
    int cur = 0, have = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = (cur << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + kBias));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + kBias));
    return out;
}

}  // namespace cyclesat
