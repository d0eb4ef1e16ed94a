#ifndef OHMCURVE_GRAPH_HPP
#define OHMCURVE_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ohmcurve {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows
// (one 64-bit word per row up to n = 64, multi-word beyond). Treated as an
// immutable value by every operation in the library: mutators exist for
// construction only, and all algorithms take graphs by const reference.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), adj_(std::size_t(n) * words_, 0) {
        if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (int u = 0; u < n_; ++u) twice += degree(u);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[row(u) + std::size_t(v) / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[row(u) + std::size_t(v) / 64] |= std::uint64_t(1) << (v % 64);
        adj_[row(v) + std::size_t(u) / 64] |= std::uint64_t(1) << (u % 64);
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw std::invalid_argument("Graph: removing a non-edge");
        adj_[row(u) + std::size_t(v) / 64] &= ~(std::uint64_t(1) << (v % 64));
        adj_[row(v) + std::size_t(u) / 64] &= ~(std::uint64_t(1) << (u % 64));
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(adj_[row(u) + w]);
        return d;
    }

    template <class F>
    void for_neighbors(int u, F&& f) const {
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = adj_[row(u) + w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                f(v);
            }
        }
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_neighbors(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    // Raw adjacency words of row u; used by the bitset BFS in connectivity.
    const std::uint64_t* row_words(int u) const { return adj_.data() + row(u); }
    int words_per_row() const { return words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    std::size_t row(int u) const { return std::size_t(u) * words_; }
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::invalid_argument("Graph: vertex index out of range");
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> adj_;
};

// Copy of g with edge {u,v} removed; throws on a non-edge.
Graph delete_edge(const Graph& g, int u, int v);

// True iff every vertex is reachable from vertex 0 (n = 1 is connected).
bool is_connected(const Graph& g);

bool has_cut_vertex(const Graph& g);

// connected, no cut vertex, and at least three vertices
bool is_two_connected(const Graph& g);

struct Classification {
    bool is_cycle = false;
    bool is_complete = false;
};
Classification classify(const Graph& g);

// Blocks (maximal subgraphs without a cut vertex, including bridges) and cut
// vertices of a connected graph. Block vertex sets and cut vertices are sorted.
struct BlockDecomposition {
    std::vector<int> cut_vertices;
    std::vector<std::vector<int>> blocks;
};

// Depth-first low-link traversal, O(n + m). Throws on disconnected input.
BlockDecomposition block_cut_decomposition(const Graph& g);

// Canonical small families: C_n (n >= 3) and K_n (n >= 1), vertices 0..n-1.
Graph cycle_graph(int n);
Graph complete_graph(int n);

} // namespace ohmcurve

#endif
