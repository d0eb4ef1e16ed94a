#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "ohmcurve/enumeration.hpp"
#include "ohmcurve/graph.hpp"
#include "ohmcurve/graph6.hpp"

using namespace ohmcurve;

namespace {

// Union-find connectivity oracle, independent of the BFS in the library.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected_oracle(const Graph& g) {
    Dsu dsu(g.vertex_count());
    for (const auto& [u, v] : g.edges()) dsu.unite(u, v);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (dsu.find(v) != dsu.find(0)) return false;
    return true;
}

// Brute-force articulation test: delete each vertex and recheck connectivity.
bool cut_vertex_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (!connected_oracle(g)) return false;
    for (int cut = 0; cut < n; ++cut) {
        Dsu dsu(n);
        for (const auto& [u, v] : g.edges())
            if (u != cut && v != cut) dsu.unite(u, v);
        int root = -1;
        bool split = false;
        for (int v = 0; v < n && !split; ++v) {
            if (v == cut) continue;
            if (root == -1) root = dsu.find(v);
            else if (dsu.find(v) != root) split = true;
        }
        if (split) return true;
    }
    return false;
}

Graph bowtie() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

} // namespace

TEST_CASE("graph basics: edges, degrees, neighbor iteration") {
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    std::vector<int> seen;
    g.for_neighbors(1, [&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{0, 2});
    const auto es = g.edges();
    CHECK(es == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.remove_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("connectivity agrees with a union-find oracle on all graphs up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            REQUIRE(is_connected(g) == connected_oracle(g));
        }
    }
}

TEST_CASE("cut vertices agree with brute-force vertex deletion on all connected graphs up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            REQUIRE(has_cut_vertex(g) == cut_vertex_oracle(g));
        }
    }
}

TEST_CASE("two-connectedness matches its definition") {
    CHECK_FALSE(is_two_connected(complete_graph(1)));
    CHECK_FALSE(is_two_connected(complete_graph(2)));
    CHECK(is_two_connected(complete_graph(3)));
    CHECK(is_two_connected(cycle_graph(5)));
    CHECK_FALSE(is_two_connected(bowtie()));
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(is_two_connected(path));
    for (int n = 3; n <= 6; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            REQUIRE(is_two_connected(g) ==
                    (is_connected(g) && !cut_vertex_oracle(g) && n >= 3));
        }
    }
}

TEST_CASE("block decomposition invariants on all connected graphs up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) {
                if (n > 1) REQUIRE_THROWS_AS(block_cut_decomposition(g), std::invalid_argument);
                continue;
            }
            const BlockDecomposition d = block_cut_decomposition(g);

            // Every vertex appears; every edge lies in exactly one block.
            std::set<int> covered;
            for (const auto& b : d.blocks) covered.insert(b.begin(), b.end());
            REQUIRE(static_cast<int>(covered.size()) == n);
            for (const auto& [u, v] : g.edges()) {
                int homes = 0;
                for (const auto& b : d.blocks)
                    if (std::binary_search(b.begin(), b.end(), u) &&
                        std::binary_search(b.begin(), b.end(), v))
                        ++homes;
                REQUIRE(homes == 1);
            }

            // Cut vertices are exactly the vertices shared by >= 2 blocks.
            std::vector<int> shared;
            for (int v = 0; v < n; ++v) {
                int owners = 0;
                for (const auto& b : d.blocks)
                    if (std::binary_search(b.begin(), b.end(), v)) ++owners;
                if (owners >= 2) shared.push_back(v);
            }
            REQUIRE(shared == d.cut_vertices);
            REQUIRE(has_cut_vertex(g) == !d.cut_vertices.empty());

            // Blocks of size >= 3 induce 2-connected subgraphs; size-2 blocks
            // are single edges (bridges).
            for (const auto& b : d.blocks) {
                Graph h(static_cast<int>(b.size()));
                for (std::size_t a = 0; a < b.size(); ++a)
                    for (std::size_t c = a + 1; c < b.size(); ++c)
                        if (g.has_edge(b[a], b[c]))
                            h.add_edge(static_cast<int>(a), static_cast<int>(c));
                if (b.size() >= 3)
                    REQUIRE(is_two_connected(h));
                else if (b.size() == 2)
                    REQUIRE(h.edge_count() == 1);
            }

            // A 2-connected graph is one single block.
            REQUIRE((d.blocks.size() == 1 && n >= 3 && g.edge_count() >= n) ==
                    is_two_connected(g));
        }
    }
}

TEST_CASE("bowtie decomposes into its two triangles at the shared vertex") {
    const BlockDecomposition d = block_cut_decomposition(bowtie());
    CHECK(d.cut_vertices == std::vector<int>{2});
    CHECK(d.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("classify recognizes cycles and complete graphs") {
    CHECK(classify(cycle_graph(5)).is_cycle);
    CHECK_FALSE(classify(cycle_graph(5)).is_complete);
    CHECK(classify(complete_graph(5)).is_complete);
    CHECK_FALSE(classify(complete_graph(5)).is_cycle);
    const Classification k3 = classify(complete_graph(3));
    CHECK(k3.is_cycle);
    CHECK(k3.is_complete);
    CHECK_FALSE(classify(bowtie()).is_cycle);
    // Disjoint pair of triangles: all degrees 2 but disconnected.
    Graph two_triangles(6);
    for (int base : {0, 3})
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}})
            two_triangles.add_edge(base + a, base + b);
    CHECK_FALSE(classify(two_triangles).is_cycle);
}

TEST_CASE("delete_edge copies and removes") {
    const Graph c4 = cycle_graph(4);
    const Graph p4 = delete_edge(c4, 3, 0);
    CHECK(c4.has_edge(0, 3));
    CHECK_FALSE(p4.has_edge(0, 3));
    CHECK(p4.edge_count() == 3);
    CHECK_THROWS_AS(delete_edge(p4, 0, 3), std::invalid_argument);
}

TEST_CASE("cycle_graph and complete_graph builders") {
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
}

TEST_CASE("is_two_connected equivalent to single-block decomposition on all connected graphs up to n = 6") {
    for (int n = 3; n <= 6; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            const BlockDecomposition d = block_cut_decomposition(g);
            const bool single_block_all_vertices =
                d.blocks.size() == 1 && static_cast<int>(d.blocks.front().size()) == n;
            REQUIRE(is_two_connected(g) == single_block_all_vertices);
        }
    }
}
