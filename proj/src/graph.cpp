#include "ohmcurve/graph.hpp"

#include <algorithm>
#include <set>

namespace ohmcurve {

Graph delete_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    std::vector<std::uint64_t> reached(words, 0), frontier(words, 0);
    reached[0] = frontier[0] = 1; // vertex 0
    int count = 1;
    while (true) {
        std::vector<std::uint64_t> next(words, 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* row = g.row_words(u);
                for (int x = 0; x < words; ++x) next[x] |= row[x];
            }
        }
        bool grew = false;
        for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = next[w] & ~reached[w];
            if (fresh) {
                grew = true;
                reached[w] |= fresh;
                count += std::popcount(fresh);
            }
            frontier[w] = fresh;
        }
        if (!grew) break;
    }
    return count == n;
}

namespace {

// Iterative DFS shared by the articulation-point test and the block
// decomposition. Visits only the component of vertex 0.
struct DfsFrame {
    int vertex;
    int parent;
    int next = 0; // next neighbor index to try
};

} // namespace

bool has_cut_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return false;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::vector<int>> nbrs(n);
    for (int u = 0; u < n; ++u)
        g.for_neighbors(u, [&](int v) { nbrs[u].push_back(v); });

    int timer = 0;
    int root_children = 0;
    std::vector<DfsFrame> stack;
    stack.push_back({0, -1});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        DfsFrame& f = stack.back();
        if (f.next < int(nbrs[f.vertex].size())) {
            int v = nbrs[f.vertex][f.next++];
            if (disc[v] == -1) {
                if (f.vertex == 0) ++root_children;
                disc[v] = low[v] = timer++;
                stack.push_back({v, f.vertex});
            } else if (v != f.parent) {
                low[f.vertex] = std::min(low[f.vertex], disc[v]);
            }
        } else {
            int u = f.vertex, p = f.parent;
            stack.pop_back();
            if (p > 0 && low[u] >= disc[p]) return true; // non-root articulation
            if (p >= 0) low[p] = std::min(low[p], low[u]);
        }
    }
    return root_children > 1;
}

bool is_two_connected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && !has_cut_vertex(g);
}

Classification classify(const Graph& g) {
    const int n = g.vertex_count();
    Classification c;
    bool all_degree_two = true, complete = true;
    for (int u = 0; u < n; ++u) {
        int d = g.degree(u);
        if (d != 2) all_degree_two = false;
        if (d != n - 1) complete = false;
    }
    c.is_complete = complete;
    c.is_cycle = n >= 3 && all_degree_two && is_connected(g);
    return c;
}

BlockDecomposition block_cut_decomposition(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block_cut_decomposition: graph is disconnected");
    const int n = g.vertex_count();
    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back({0});
        return out;
    }

    std::vector<std::vector<int>> nbrs(n);
    for (int u = 0; u < n; ++u)
        g.for_neighbors(u, [&](int v) { nbrs[u].push_back(v); });

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<bool> is_cut(n, false);
    int timer = 0;
    int root_children = 0;

    std::vector<DfsFrame> stack;
    stack.push_back({0, -1});
    disc[0] = low[0] = timer++;

    auto pop_block = [&](int u, int v) {
        std::set<int> verts;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            if (a == u && b == v) break;
            edge_stack.pop_back();
            verts.insert(a);
            verts.insert(b);
        }
        // the (u,v) tree edge itself
        edge_stack.pop_back();
        verts.insert(u);
        verts.insert(v);
        out.blocks.emplace_back(verts.begin(), verts.end());
    };

    while (!stack.empty()) {
        DfsFrame& f = stack.back();
        if (f.next < int(nbrs[f.vertex].size())) {
            int u = f.vertex;
            int v = nbrs[u][f.next++];
            if (disc[v] == -1) {
                if (u == 0) ++root_children;
                edge_stack.emplace_back(u, v);
                disc[v] = low[v] = timer++;
                stack.push_back({v, u});
            } else if (v != f.parent && disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        } else {
            int u = f.vertex, p = f.parent;
            stack.pop_back();
            if (p >= 0) {
                if (low[u] >= disc[p]) {
                    pop_block(p, u);
                    if (p != 0) is_cut[p] = true;
                }
                low[p] = std::min(low[p], low[u]);
            }
        }
    }
    if (root_children > 1) is_cut[0] = true;

    for (int u = 0; u < n; ++u)
        if (is_cut[u]) out.cut_vertices.push_back(u);
    for (auto& b : out.blocks) std::sort(b.begin(), b.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: cycles need n >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace ohmcurve
