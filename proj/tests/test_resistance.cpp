#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <vector>

#include "ohmcurve/enumeration.hpp"
#include "ohmcurve/graph.hpp"
#include "ohmcurve/linalg.hpp"
#include "ohmcurve/rational.hpp"
#include "ohmcurve/resistance.hpp"

using namespace ohmcurve;

namespace {

Rational det_rational(Matrix<Rational> m) {
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            m.swap_rows(piv, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

Matrix<Rational> drop_rows_cols(const Matrix<Rational>& m, std::vector<int> drop) {
    std::sort(drop.begin(), drop.end());
    const auto dropped = [&](int i) {
        return std::binary_search(drop.begin(), drop.end(), i);
    };
    const std::size_t out_dim = m.rows() - drop.size();
    Matrix<Rational> out(out_dim, out_dim);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (dropped(static_cast<int>(i))) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (dropped(static_cast<int>(j))) continue;
            out(oi, oj) = m(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

// Matrix-tree oracle: Omega(u,v) = (2-forests separating u,v) / (spanning
// trees), both as Laplacian minors. Entirely independent of the grounded
// inverse used by the library.
Rational resistance_by_determinants(const Graph& g, int u, int v) {
    const Matrix<Rational> l = laplacian<Rational>(g);
    const Rational trees = det_rational(drop_rows_cols(l, {u}));
    const Rational forests = det_rational(drop_rows_cols(l, {u, v}));
    return forests / trees;
}

Graph tree_from_pruefer(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (const int a : code) ++degree[static_cast<std::size_t>(a)];
    Graph g(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const int a : code) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        g.add_edge(leaf, a);
        used[static_cast<std::size_t>(leaf)] = true;
        --degree[static_cast<std::size_t>(a)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1)
            (a == -1 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        g.for_neighbors(u, [&](int v) {
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
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

Graph cube_graph() {
    Graph g(8); // vertices are 3-bit strings, edges flip one bit
    for (int u = 0; u < 8; ++u)
        for (int bit : {1, 2, 4})
            if (u < (u ^ bit)) g.add_edge(u, u ^ bit);
    return g;
}

Graph random_connected(std::mt19937& rng, int n, int extra_edges) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < extra_edges; ++k) {
        const int u = pick(rng), v = pick(rng);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

} // namespace

TEST_CASE("path P3: frozen resistance report") {
    const ResistanceReport rep = analyze(path_graph(3));
    CHECK(rep.r(0, 1) == Rational(1));
    CHECK(rep.r(0, 2) == Rational(2));
    CHECK(rep.ecc == std::vector<Rational>{Rational(3), Rational(2), Rational(3)});
    CHECK(rep.kf == Rational(4));
    CHECK(rep.kappa == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1, 2)});
    CHECK_FALSE(rep.resistance_regular);
    CHECK_FALSE(rep.constant_curvature.has_value());
    CHECK(resistive_eccentricity(rep, 1) == Rational(2));
    CHECK(kirchhoff_index(rep) == Rational(4));
    CHECK_THROWS_AS(resistive_eccentricity(rep, 3), std::invalid_argument);
}

TEST_CASE("triangle K3: frozen resistance report") {
    const ResistanceReport rep = analyze(complete_graph(3));
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            CHECK(rep.r(u, v) == (u == v ? Rational(0) : Rational(2, 3)));
    CHECK(rep.kf == Rational(2));
    CHECK(rep.resistance_regular);
    CHECK(rep.constant_curvature == Rational(3, 4));
}

TEST_CASE("cycle C4 and C5: frozen values") {
    const ResistanceReport c4 = analyze(cycle_graph(4));
    CHECK(c4.r(0, 1) == Rational(3, 4));
    CHECK(c4.r(0, 2) == Rational(1));
    CHECK(c4.ecc.front() == Rational(5, 2));
    CHECK(c4.kf == Rational(5));
    CHECK(c4.constant_curvature == Rational(2, 5));

    const ResistanceReport c5 = analyze(cycle_graph(5));
    CHECK(c5.ecc.front() == Rational(4));
    CHECK(c5.kf == Rational(10));
    CHECK(c5.constant_curvature == Rational(1, 4));

    CHECK(analyze(cycle_graph(6)).constant_curvature == Rational(6, 35));
}

TEST_CASE("complete K5: frozen values") {
    const ResistanceReport k5 = analyze(complete_graph(5));
    CHECK(k5.r(2, 4) == Rational(2, 5));
    CHECK(k5.kf == Rational(4));
    CHECK(k5.constant_curvature == Rational(5, 8));
}

TEST_CASE("3-cube: resistances by distance and curvature 6/29") {
    const ResistanceReport q3 = analyze(cube_graph());
    CHECK(q3.r(0, 1) == Rational(7, 12));
    CHECK(q3.r(0, 3) == Rational(3, 4));
    CHECK(q3.r(0, 7) == Rational(5, 6));
    CHECK(q3.ecc.front() == Rational(29, 6));
    CHECK(q3.kf == Rational(58, 3));
    CHECK(q3.resistance_regular);
    CHECK(q3.constant_curvature == Rational(6, 29));
}

TEST_CASE("star K_{1,3}: negative curvature at the hub") {
    const std::vector<Rational> kappa = curvature_vector(star_graph(3));
    CHECK(kappa == std::vector<Rational>{Rational(-1, 3), Rational(1, 3), Rational(1, 3),
                                         Rational(1, 3)});
}

TEST_CASE("resistance matrix matches the determinant oracle exhaustively to n = 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            const Matrix<Rational> r = resistance_matrix(g);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    REQUIRE(r(u, v) == resistance_by_determinants(g, u, v));
        }
    }
}

TEST_CASE("resistance matrix matches the determinant oracle on sampled n = 6, 7 graphs") {
    std::mt19937 rng(99);
    for (const int n : {6, 7}) {
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = random_connected(rng, n, static_cast<int>(rng() % 12));
            const Matrix<Rational> r = resistance_matrix(g);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    REQUIRE(r(u, v) == resistance_by_determinants(g, u, v));
        }
    }
}

TEST_CASE("tree resistances equal path distances for every labeled tree up to n = 7") {
    for (int n = 3; n <= 7; ++n) {
        const int codes = n - 2;
        std::vector<int> code(static_cast<std::size_t>(codes), 0);
        while (true) {
            const Graph t = tree_from_pruefer(code);
            const Matrix<Rational> r = resistance_matrix(t);
            for (int u = 0; u < n; ++u) {
                const std::vector<int> dist = bfs_distances(t, u);
                for (int v = 0; v < n; ++v)
                    REQUIRE(r(u, v) == Rational(dist[static_cast<std::size_t>(v)]));
            }
            int pos = codes - 1;
            while (pos >= 0 && code[static_cast<std::size_t>(pos)] == n - 1) {
                code[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++code[static_cast<std::size_t>(pos)];
        }
    }
}

TEST_CASE("metric axioms hold exhaustively to n = 5 and on sampled n = 6 graphs") {
    const auto check_metric = [](const Graph& g) {
        const int n = g.vertex_count();
        const Matrix<Rational> r = resistance_matrix(g);
        for (int u = 0; u < n; ++u) {
            REQUIRE(r(u, u) == Rational(0));
            for (int v = u + 1; v < n; ++v) {
                REQUIRE(r(u, v) == r(v, u));
                REQUIRE(r(u, v) > Rational(0));
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w)
                    REQUIRE(r(u, w) <= r(u, v) + r(v, w));
    };
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (is_connected(g)) check_metric(g);
        }
    }
    const std::uint64_t total6 = labeled_graph_count(6);
    for (std::uint64_t mask = 0; mask < total6; mask += 17) {
        const Graph g = graph_from_mask(6, mask);
        if (is_connected(g)) check_metric(g);
    }
}

TEST_CASE("Rayleigh monotonicity: deleting an edge never lowers resistances, exhaustively to n = 5") {
    for (int n = 3; n <= 5; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            const Matrix<Rational> r = resistance_matrix(g);
            const ExactSummary s = exact_resistance_summary(g);
            for (const auto& [u, v] : g.edges()) {
                const Graph h = delete_edge(g, u, v);
                if (!is_connected(h)) continue;
                const Matrix<Rational> rh = resistance_matrix(h);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) REQUIRE(rh(a, b) >= r(a, b));
                const ExactSummary sh = exact_resistance_summary(h);
                for (int a = 0; a < n; ++a)
                    REQUIRE(sh.ecc[static_cast<std::size_t>(a)] >=
                            s.ecc[static_cast<std::size_t>(a)]);
            }
        }
    }
}

TEST_CASE("deletion_update reproduces the direct matrix for every restorable edge, exhaustively to n = 5") {
    for (int n = 3; n <= 5; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            const Matrix<Rational> r = resistance_matrix(g);
            for (const auto& [u, v] : g.edges()) {
                const Graph h = delete_edge(g, u, v);
                if (!is_connected(h)) continue;
                const Matrix<Rational> rebuilt =
                    deletion_update(resistance_matrix(h), u, v);
                REQUIRE(rebuilt == r);
            }
        }
    }
}

TEST_CASE("deletion_update in the float domain stays within 1e-9 on random graphs up to n = 12") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const Graph g = random_connected(rng, n, n);
        const Matrix<double> r = resistance_matrix_real(g);
        const auto edges = g.edges();
        const auto [u, v] = edges[rng() % edges.size()];
        const Graph h = delete_edge(g, u, v);
        if (!is_connected(h)) continue;
        const Matrix<double> rebuilt = deletion_update(resistance_matrix_real(h), u, v);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                REQUIRE(std::abs(rebuilt(a, b) - r(a, b)) <= 1e-9);
    }
}

TEST_CASE("deletion_update restoring an edge of C3 from P3 gives 2/3") {
    const Matrix<Rational> rebuilt = deletion_update(resistance_matrix(path_graph(3)), 0, 2);
    CHECK(rebuilt(0, 1) == Rational(2, 3));
    CHECK(rebuilt(0, 2) == Rational(2, 3));
    CHECK(rebuilt(1, 2) == Rational(2, 3));
    CHECK(rebuilt(0, 0) == Rational(0));
}

TEST_CASE("deletion_update rejects bad endpoints") {
    const Matrix<Rational> r = resistance_matrix(path_graph(3));
    CHECK_THROWS_AS(deletion_update(r, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(deletion_update(r, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(deletion_update(r, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(deletion_update(Matrix<Rational>(2, 3), 0, 1), std::invalid_argument);
}

TEST_CASE("compose_across_cut: two edges form a path, two triangles form the bowtie") {
    const Matrix<Rational> edge = resistance_matrix(complete_graph(2));
    const CutComposition path = compose_across_cut(edge, edge, 1, 0);
    CHECK(path.h2_to_union == std::vector<int>{1, 2});
    CHECK(path.r(0, 2) == Rational(2));
    CHECK(path.r(0, 1) == Rational(1));

    const Matrix<Rational> tri = resistance_matrix(complete_graph(3));
    const CutComposition bt = compose_across_cut(tri, tri, 2, 0);
    CHECK(bt.h2_to_union == std::vector<int>{2, 3, 4});
    CHECK(bt.r == resistance_matrix(bowtie()));
    CHECK(bt.r(0, 3) == Rational(4, 3));

    CHECK_THROWS_AS(compose_across_cut(tri, tri, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(compose_across_cut(Matrix<Rational>(2, 3), tri, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("block-accelerated resistance equals the direct solve exhaustively to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            REQUIRE(block_accelerated_resistance(g) == resistance_matrix(g));
        }
    }
}

TEST_CASE("block-accelerated resistance on cut-vertex-heavy graphs") {
    CHECK(block_accelerated_resistance(bowtie()) == resistance_matrix(bowtie()));
    CHECK(block_accelerated_resistance(star_graph(6)) == resistance_matrix(star_graph(6)));
    CHECK(block_accelerated_resistance(path_graph(9)) == resistance_matrix(path_graph(9)));
    // Barbell: two K5 blocks joined by a bridge path through two cut vertices.
    Graph barbell(10);
    for (int base : {0, 5})
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) barbell.add_edge(base + a, base + b);
    barbell.add_edge(4, 5);
    CHECK(block_accelerated_resistance(barbell) == resistance_matrix(barbell));
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_connected(rng, 8, static_cast<int>(rng() % 4));
        REQUIRE(block_accelerated_resistance(g) == resistance_matrix(g));
    }
}

TEST_CASE("grounding choice is invisible: resistances are permutation-equivariant") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const Graph g = random_connected(rng, n, n / 2);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (const auto& [u, v] : g.edges())
            h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        const Matrix<Rational> rg = resistance_matrix(g);
        const Matrix<Rational> rh = resistance_matrix(h);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                REQUIRE(rg(u, v) == rh(perm[static_cast<std::size_t>(u)],
                                       perm[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("large closed-form families exercise the general rational path") {
    // These orders exceed the integer fast path's Hadamard guard.
    const Matrix<Rational> k15 = resistance_matrix(complete_graph(15));
    CHECK(k15(3, 11) == Rational(2, 15));
    const Matrix<Rational> c50 = resistance_matrix(cycle_graph(50));
    CHECK(c50(0, 1) == Rational(49, 50));
    CHECK(c50(0, 25) == Rational(25 * 25, 50));
    const ExactSummary s = exact_resistance_summary(cycle_graph(50));
    CHECK(s.ecc.front() == Rational(2500 - 1, 6));
    CHECK(s.regular);
}

TEST_CASE("exact summary agrees with analyze") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = random_connected(rng, n, static_cast<int>(rng() % 8));
        const ResistanceReport rep = analyze(g);
        const ExactSummary s = exact_resistance_summary(g);
        CHECK(s.ecc == rep.ecc);
        CHECK(s.kf == rep.kf);
        CHECK(s.regular == rep.resistance_regular);
    }
}

TEST_CASE("float mirrors stay within 1e-9 of the exact values") {
    std::mt19937 rng(60601);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = random_connected(rng, n, static_cast<int>(rng() % 10));
        const Matrix<Rational> r = resistance_matrix(g);
        const Matrix<double> rd = resistance_matrix_real(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                REQUIRE(std::abs(rd(u, v) - r(u, v).to_double()) <= 1e-9);
        const FloatSummary fs = float_resistance_summary(g);
        const ExactSummary es = exact_resistance_summary(g);
        for (int u = 0; u < n; ++u)
            REQUIRE(std::abs(fs.ecc[static_cast<std::size_t>(u)] -
                             es.ecc[static_cast<std::size_t>(u)].to_double()) <= 1e-9);
        REQUIRE(std::abs(fs.kf - es.kf.to_double()) <= 1e-9);
    }
}

TEST_CASE("disconnected and degenerate inputs are rejected") {
    Graph two(2); // no edges
    CHECK_THROWS_AS(resistance_matrix(two), std::invalid_argument);
    CHECK_THROWS_AS(resistance_matrix_real(two), std::invalid_argument);
    CHECK_THROWS_AS(curvature_vector(two), std::invalid_argument);
    CHECK_THROWS_AS(analyze(two), std::invalid_argument);
    CHECK_THROWS_AS(block_accelerated_resistance(two), std::invalid_argument);
    CHECK_THROWS_AS(curvature_vector(complete_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(analyze(complete_graph(1)), std::invalid_argument);
    CHECK(resistance_matrix(complete_graph(1)) == Matrix<Rational>(1, 1));
}

TEST_CASE("closed-form structs") {
    const CycleClosedForms c5 = cycle_closed_forms(5);
    CHECK(c5.eccentricity == Rational(4));
    CHECK(c5.kirchhoff == Rational(10));
    CHECK(c5.curvature == Rational(1, 4));
    CHECK(c5.pair_resistance(0) == Rational(0));
    CHECK(c5.pair_resistance(2) == Rational(6, 5));
    CHECK_THROWS_AS(c5.pair_resistance(3), std::invalid_argument);
    CHECK_THROWS_AS(c5.pair_resistance(-1), std::invalid_argument);
    CHECK_THROWS_AS(cycle_closed_forms(2), std::invalid_argument);

    const CompleteClosedForms k6 = complete_closed_forms(6);
    CHECK(k6.pair_resistance == Rational(1, 3));
    CHECK(k6.kirchhoff == Rational(5));
    CHECK(k6.curvature == Rational(3, 5));
    CHECK_THROWS_AS(complete_closed_forms(1), std::invalid_argument);
}

TEST_CASE("reports serialize with the documented fields and p/q strings") {
    const nlohmann::ordered_json j = report_to_json(analyze(path_graph(3)));
    CHECK(j["n"] == 3);
    CHECK(j["resistance_matrix"][0][2] == "2/1");
    CHECK(j["eccentricities"] == nlohmann::json({"3/1", "2/1", "3/1"}));
    CHECK(j["kirchhoff_index"] == "4/1");
    CHECK(j["curvature"][0] == "1/2");
    CHECK(j["resistance_regular"] == false);
    CHECK(j["constant_curvature"].is_null());
    const std::string dumped = j.dump();
    CHECK(dumped.find("\"n\"") < dumped.find("\"resistance_matrix\""));
    CHECK(dumped.find("\"resistance_matrix\"") < dumped.find("\"kirchhoff_index\""));

    const nlohmann::ordered_json jk = report_to_json(analyze(complete_graph(3)));
    CHECK(jk["constant_curvature"] == "3/4");
    CHECK(jk["resistance_regular"] == true);
}
