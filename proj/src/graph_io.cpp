#include "d2c/graph.hpp"

#include <charconv>
#include <sstream>

namespace d2c {

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6MaxShort = 62;
constexpr long long kG6MaxLong = 258047;  // 3-byte size field

int g6_byte(std::string_view s, size_t offset) {
    unsigned char b = static_cast<unsigned char>(s[offset]);
    if (b < 63 || b > 126)
        throw ParseError("graph6: byte " + std::to_string(offset) + " outside [63, 126]");
    return b - kG6Bias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty record");
    long long n = 0;
    size_t pos = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6: byte 1: 6-byte size encoding not supported");
        if (line.size() < 4) throw ParseError("graph6: truncated size field");
        n = (static_cast<long long>(g6_byte(line, 1)) << 12) | (g6_byte(line, 2) << 6) |
            g6_byte(line, 3);
        pos = 4;
    } else {
        n = g6_byte(line, 0);
        pos = 1;
    }
    if (n == 0) throw ParseError("graph6: empty graph (n = 0) not supported");

    long long bits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((bits + 5) / 6);
    if (line.size() != pos + nbytes)
        throw ParseError("graph6: record for n = " + std::to_string(n) + " must be " +
                         std::to_string(pos + nbytes) + " bytes, got " +
                         std::to_string(line.size()));

    std::vector<std::pair<int, int>> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            size_t offset = pos + static_cast<size_t>(k / 6);
            int bit = 5 - static_cast<int>(k % 6);
            if ((g6_byte(line, offset) >> bit) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits past the adjacency data must be zero.
    for (; k < static_cast<long long>(nbytes) * 6; ++k) {
        size_t offset = pos + static_cast<size_t>(k / 6);
        int bit = 5 - static_cast<int>(k % 6);
        if ((g6_byte(line, offset) >> bit) & 1)
            throw ParseError("graph6: nonzero padding bit in byte " + std::to_string(offset));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    long long n = g.n();
    if (n == 0) throw std::invalid_argument("graph6: empty graph (n = 0) not supported");
    if (n > kG6MaxLong)
        throw std::invalid_argument("graph6: n = " + std::to_string(n) +
                                    " exceeds the supported maximum " + std::to_string(kG6MaxLong));
    std::string out;
    if (n <= kG6MaxShort) {
        out.push_back(static_cast<char>(n + kG6Bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Bias));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Bias));
    }
    long long bits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((bits + 5) / 6);
    std::vector<int> bytes(nbytes, 0);
    for (auto [u, v] : g.edges()) {
        long long k = static_cast<long long>(v) * (v - 1) / 2 + u;
        bytes[static_cast<size_t>(k / 6)] |= 1 << (5 - static_cast<int>(k % 6));
    }
    for (int b : bytes) out.push_back(static_cast<char>(b + kG6Bias));
    return out;
}

namespace {

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}

bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> seen;

    while (std::getline(stream, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        long long a, b;
        if (!parse_two_ints(line, a, b))
            throw ParseError("edge list: line " + std::to_string(lineno) +
                             ": expected two integers");
        if (n < 0) {
            n = a;
            m = b;
            if (n < 1)
                throw ParseError("edge list: line " + std::to_string(lineno) +
                                 ": vertex count must be at least 1");
            if (m < 0)
                throw ParseError("edge list: line " + std::to_string(lineno) +
                                 ": negative edge count");
            seen.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": expected " +
                             std::to_string(m) + " edges, found extra data");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError("edge list: line " + std::to_string(lineno) +
                             ": endpoint out of range [0, " + std::to_string(n) + ")");
        if (a == b)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": self-loop");
        if (seen[a][b])
            throw ParseError("edge list: line " + std::to_string(lineno) + ": duplicate edge");
        seen[a][b] = seen[b][a] = 1;
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) throw ParseError("edge list: missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                         std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

}  // namespace d2c
