#include "ohmcurve/graph6.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>

#include "ohmcurve/errors.hpp"

namespace ohmcurve {

namespace {

constexpr int kOffset = 63;
constexpr std::int64_t kMaxOrder = 68719476735; // 2^36 - 1

int sixbits_at(std::string_view line, std::size_t pos) {
    if (pos >= line.size())
        throw ParseError("graph6: truncated input at byte " + std::to_string(pos));
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: character out of range 63..126 at byte " + std::to_string(pos));
    return c - kOffset;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty input");
    if (line[0] == ':' || line[0] == ';')
        throw ParseError("graph6: sparse6 input not supported (leading '" + std::string(1, line[0]) + "')");
    if (line[0] == '&')
        throw ParseError("graph6: digraph6 input not supported (leading '&')");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (line[0] != '~') {
        n = sixbits_at(line, pos++);
    } else if (line.size() > 1 && line[1] != '~') {
        ++pos;
        for (int k = 0; k < 3; ++k) n = (n << 6) | sixbits_at(line, pos++);
        if (n < 63) throw ParseError("graph6: malformed length header (overlong encoding of n=" + std::to_string(n) + ")");
    } else {
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | sixbits_at(line, pos++);
        if (n < 258048) throw ParseError("graph6: malformed length header (overlong encoding of n=" + std::to_string(n) + ")");
    }
    if (n < 1) throw ParseError("graph6: vertex count must be >= 1, got " + std::to_string(n));
    if (n > kMaxOrder) throw ParseError("graph6: vertex count out of range");

    Graph g(static_cast<int>(n));
    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != pos + body_bytes)
        throw ParseError("graph6: malformed length header (expected " +
                         std::to_string(pos + body_bytes) + " bytes, got " +
                         std::to_string(line.size()) + ")");

    std::int64_t bit = 0;
    int buffer = 0, buffered = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (buffered == 0) {
                buffer = sixbits_at(line, pos++);
                buffered = 6;
            }
            if (buffer & (1 << (buffered - 1))) g.add_edge(i, j);
            --buffered;
        }
    }
    if (buffered > 0 && (buffer & ((1 << buffered) - 1)) != 0)
        throw ParseError("graph6: trailing padding bits nonzero at byte " + std::to_string(pos - 1));
    return g;
}

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
    }

    int buffer = 0, buffered = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.has_edge(i, static_cast<int>(j)) ? 1 : 0);
            if (++buffered == 6) {
                out.push_back(static_cast<char>(buffer + kOffset));
                buffer = 0;
                buffered = 0;
            }
        }
    }
    if (buffered > 0)
        out.push_back(static_cast<char>((buffer << (6 - buffered)) + kOffset));
    return out;
}

namespace {

int parse_int_token(const std::string& token, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("edge list line " + std::to_string(line_no) + ": non-numeric " +
                         what + " '" + token + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    Graph g(1);
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue; // blank line
        if (n < 0) {
            n = parse_int_token(a, line_no, "vertex count");
            if (n < 1) throw ParseError("edge list: vertex count must be >= 1");
            if (fields >> extra) throw ParseError("edge list line " + std::to_string(line_no) + ": trailing token after vertex count");
            g = Graph(n);
            continue;
        }
        if (!(fields >> b)) throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        if (fields >> extra) throw ParseError("edge list line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        int u = parse_int_token(a, line_no, "vertex index");
        int v = parse_int_token(b, line_no, "vertex index");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list line " + std::to_string(line_no) + ": vertex index out of range");
        if (u == v)
            throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop rejected");
        g.add_edge(u, v); // duplicates collapse in the bitset
    }
    if (n < 0) throw ParseError("edge list: missing vertex count line");
    return g;
}

} // namespace ohmcurve
