#ifndef OHMCURVE_ENUMERATION_HPP
#define OHMCURVE_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "ohmcurve/graph.hpp"

namespace ohmcurve {

enum class Connectivity { any, connected, two_connected };

struct GraphFilter {
    Connectivity connectivity = Connectivity::any;
    std::optional<int> min_edges;
    std::optional<int> max_edges;
    bool passes(const Graph& g) const;
};

// Exhaustive labeled enumeration is kept behind a hard cap (default 8, i.e.
// 2^28 bitmasks). OHMCURVE_CAP raises or lowers it; values above 11 are
// rejected because edge masks live in 64 bits.
int enumeration_cap();
constexpr int kDefaultEnumerationCap = 8;
constexpr int kMaxEnumerationCap = 11;

// Number of labeled graphs on n vertices, 2^C(n,2). Requires n <= 11.
std::uint64_t labeled_graph_count(int n);

// Bit k of mask is the k-th vertex pair in column-major upper-triangle order:
// (0,1), (0,2), (1,2), (0,3), ... — the same order graph6 serializes.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of_graph(const Graph& g);

// All labeled graphs on n vertices that pass the filter, in increasing mask
// order. Requires 1 <= n <= enumeration_cap().
class LabeledGraphStream {
public:
    LabeledGraphStream(int n, GraphFilter filter = {});
    std::optional<Graph> next();
    int order() const { return n_; }

private:
    int n_;
    GraphFilter filter_;
    std::uint64_t next_mask_;
    std::uint64_t total_;
};

// Reads one graph6 graph per line. Malformed lines either abort (strict) or
// are reported to on_warning and skipped. Blank lines are always skipped.
class Graph6LineStream {
public:
    Graph6LineStream(std::istream& in, GraphFilter filter = {}, bool strict = true,
                     std::function<void(const std::string&)> on_warning = nullptr);
    std::optional<Graph> next();
    int line_number() const { return line_; }

private:
    std::istream& in_;
    GraphFilter filter_;
    bool strict_;
    std::function<void(const std::string&)> on_warning_;
    int line_ = 0;
};

} // namespace ohmcurve

#endif
