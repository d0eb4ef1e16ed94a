#include "ohmcurve/enumeration.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <stdexcept>
#include <string>

#include "ohmcurve/errors.hpp"
#include "ohmcurve/graph6.hpp"

namespace ohmcurve {

bool GraphFilter::passes(const Graph& g) const {
    if (min_edges && g.edge_count() < *min_edges) return false;
    if (max_edges && g.edge_count() > *max_edges) return false;
    switch (connectivity) {
        case Connectivity::any: return true;
        case Connectivity::connected: return is_connected(g);
        case Connectivity::two_connected: return is_two_connected(g);
    }
    return false;
}

int enumeration_cap() {
    const char* env = std::getenv("OHMCURVE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
    int value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("OHMCURVE_CAP: not an integer: " + std::string(env));
    if (value < 1 || value > kMaxEnumerationCap)
        throw std::invalid_argument("OHMCURVE_CAP: must be between 1 and " +
                                    std::to_string(kMaxEnumerationCap));
    return value;
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > kMaxEnumerationCap)
        throw std::invalid_argument("labeled_graph_count: n must be between 1 and " +
                                    std::to_string(kMaxEnumerationCap));
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    if (n < 1 || n > kMaxEnumerationCap)
        throw std::invalid_argument("graph_from_mask: n out of range");
    if (n * (n - 1) / 2 < 64 && (mask >> (n * (n - 1) / 2)) != 0)
        throw std::invalid_argument("graph_from_mask: mask has bits beyond C(n,2)");
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1u) g.add_edge(i, j);
    return g;
}

std::uint64_t mask_of_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxEnumerationCap)
        throw std::invalid_argument("mask_of_graph: graph too large for a 64-bit mask");
    std::uint64_t mask = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) mask |= std::uint64_t{1} << k;
    return mask;
}

LabeledGraphStream::LabeledGraphStream(int n, GraphFilter filter)
    : n_(n), filter_(filter), next_mask_(0), total_(0) {
    const int cap = enumeration_cap();
    if (n < 1 || n > cap)
        throw std::invalid_argument("LabeledGraphStream: n = " + std::to_string(n) +
                                    " outside the enumeration cap of " + std::to_string(cap) +
                                    " (set OHMCURVE_CAP to raise it)");
    total_ = labeled_graph_count(n);
}

std::optional<Graph> LabeledGraphStream::next() {
    while (next_mask_ < total_) {
        Graph g = graph_from_mask(n_, next_mask_++);
        if (filter_.passes(g)) return g;
    }
    return std::nullopt;
}

Graph6LineStream::Graph6LineStream(std::istream& in, GraphFilter filter, bool strict,
                                   std::function<void(const std::string&)> on_warning)
    : in_(in), filter_(filter), strict_(strict), on_warning_(std::move(on_warning)) {}

std::optional<Graph> Graph6LineStream::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Graph g = parse_graph6(line);
            if (filter_.passes(g)) return g;
        } catch (const ParseError& e) {
            const std::string msg = "line " + std::to_string(line_) + ": " + e.what();
            if (strict_) throw ParseError(msg);
            if (on_warning_) on_warning_(msg);
        }
    }
    return std::nullopt;
}

} // namespace ohmcurve
