#include "ohmcurve/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "ohmcurve/errors.hpp"

namespace ohmcurve {
namespace {

// ---------------------------------------------------------------------------
// Fast exact kernel.
//
// The grounded Laplacian L0 (vertex 0 deleted) is a small integer matrix, so
// instead of rational elimination we run a fraction-free Gauss-Jordan: every
// intermediate entry is a minor of [L0 | I] and therefore an integer, and the
// final tableau is [d*I | d*L0^{-1}] with d = det(L0), the spanning tree
// count. Divisions by the previous pivot are exact. All products go through
// __int128. The path is taken only when the Hadamard bound certifies that
// every intermediate fits comfortably in int64; otherwise callers fall back
// to rational elimination.

struct GroundedInverse {
    long long det = 0;                // det(L0) = number of spanning trees
    std::vector<long long> adj;       // m x m adjugate block, row-major
    int m = 0;                        // n - 1
    long long at(int i, int j) const { return adj[static_cast<std::size_t>(i) * m + j]; }
};

constexpr double kFastPathHadamardLimit = 1e15;
constexpr int kFastPathMaxDim = 12;

bool fast_path_applicable(const Graph& g) {
    const int m = g.vertex_count() - 1;
    if (m < 1 || m > kFastPathMaxDim) return false;
    // Hadamard bound on |det| and on every minor of the grounded Laplacian:
    // product over columns of the column 2-norms.
    double bound = 1.0;
    for (int j = 1; j <= m; ++j) {
        double sq = static_cast<double>(g.degree(j)) * g.degree(j);
        sq += g.degree(j); // up to deg(j) off-diagonal -1 entries per column
        bound *= std::sqrt(sq);
        if (bound > kFastPathHadamardLimit) return false;
    }
    return true;
}

std::optional<GroundedInverse> grounded_inverse_int(const Graph& g) {
    if (!fast_path_applicable(g)) return std::nullopt;
    const int n = g.vertex_count();
    const int m = n - 1;
    const int w = 2 * m;
    std::vector<long long> t(static_cast<std::size_t>(m) * w, 0);
    auto at = [&](int i, int j) -> long long& { return t[static_cast<std::size_t>(i) * w + j]; };
    for (int u = 1; u < n; ++u) {
        at(u - 1, u - 1) = g.degree(u);
        g.for_neighbors(u, [&](int v) {
            if (v >= 1) at(u - 1, v - 1) = -1;
        });
        at(u - 1, m + (u - 1)) = 1;
    }
    long long prev = 1;
    for (int k = 0; k < m; ++k) {
        const long long piv = at(k, k);
        if (piv == 0) return std::nullopt; // cannot happen for connected input
        for (int i = 0; i < m; ++i) {
            if (i == k) continue;
            const long long f = at(i, k);
            for (int j = 0; j < w; ++j) {
                const __int128 num = static_cast<__int128>(piv) * at(i, j) -
                                     static_cast<__int128>(f) * at(k, j);
                at(i, j) = static_cast<long long>(num / prev);
            }
        }
        prev = piv;
    }
    GroundedInverse out;
    out.m = m;
    out.det = at(m - 1, m - 1);
    if (out.det <= 0) return std::nullopt;
    out.adj.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.adj[static_cast<std::size_t>(i) * m + j] = at(i, m + j);
    return out;
}

// Integer numerator of Omega(u, v) over det, with vertex 0 grounded.
long long resistance_num(const GroundedInverse& gi, int u, int v) {
    if (u == v) return 0;
    if (u == 0) return gi.at(v - 1, v - 1);
    if (v == 0) return gi.at(u - 1, u - 1);
    return gi.at(u - 1, u - 1) + gi.at(v - 1, v - 1) - 2 * gi.at(u - 1, v - 1);
}

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(op) +
                                    ": graph is disconnected, resistances are undefined");
}

Matrix<Rational> resistance_from_grounded_rational(const Graph& g) {
    const int n = g.vertex_count();
    const int m = n - 1;
    Matrix<Rational> l0(m, m);
    for (int u = 1; u < n; ++u) {
        l0(u - 1, u - 1) = Rational(g.degree(u));
        g.for_neighbors(u, [&](int v) {
            if (v >= 1) l0(u - 1, v - 1) = Rational(-1);
        });
    }
    Matrix<Rational> x = invert(l0);
    Matrix<Rational> r(n, n);
    for (int u = 1; u < n; ++u) {
        r(0, u) = x(u - 1, u - 1);
        r(u, 0) = r(0, u);
    }
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            r(u, v) = x(u - 1, u - 1) + x(v - 1, v - 1) - Rational(2) * x(u - 1, v - 1);
            r(v, u) = r(u, v);
        }
    return r;
}

} // namespace

Matrix<Rational> resistance_matrix(const Graph& g) {
    require_connected(g, "resistance_matrix");
    const int n = g.vertex_count();
    if (n == 1) return Matrix<Rational>(1, 1);
    if (auto gi = grounded_inverse_int(g)) {
        Matrix<Rational> r(n, n);
        const long long d = gi->det;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Rational value(resistance_num(*gi, u, v), d);
                r(u, v) = value;
                r(v, u) = value;
            }
        return r;
    }
    return resistance_from_grounded_rational(g);
}

Matrix<double> resistance_matrix_real(const Graph& g) {
    require_connected(g, "resistance_matrix_real");
    const int n = g.vertex_count();
    if (n == 1) return Matrix<double>(1, 1);
    const int m = n - 1;
    Matrix<double> l0(m, m);
    for (int u = 1; u < n; ++u) {
        l0(u - 1, u - 1) = static_cast<double>(g.degree(u));
        g.for_neighbors(u, [&](int v) {
            if (v >= 1) l0(u - 1, v - 1) = -1.0;
        });
    }
    Matrix<double> x = invert(l0);
    Matrix<double> r(n, n);
    for (int u = 1; u < n; ++u) {
        r(0, u) = x(u - 1, u - 1);
        r(u, 0) = r(0, u);
    }
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            r(u, v) = x(u - 1, u - 1) + x(v - 1, v - 1) - 2.0 * x(u - 1, v - 1);
            r(v, u) = r(u, v);
        }
    return r;
}

std::vector<Rational> curvature_vector(const Graph& g) {
    if (g.vertex_count() == 1)
        throw std::invalid_argument(
            "curvature_vector: undefined for a single vertex (resistance matrix [[0]] is singular)");
    const Matrix<Rational> r = resistance_matrix(g);
    const std::vector<Rational> ones(static_cast<std::size_t>(r.rows()), Rational(1));
    return solve_linear_system(r, ones);
}

ResistanceReport analyze(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("analyze: needs at least two vertices");
    ResistanceReport rep;
    rep.n = n;
    rep.r = resistance_matrix(g);
    rep.ecc.assign(static_cast<std::size_t>(n), Rational(0));
    Rational total(0);
    for (int u = 0; u < n; ++u) {
        Rational sum(0);
        for (int v = 0; v < n; ++v) sum += rep.r(u, v);
        rep.ecc[static_cast<std::size_t>(u)] = sum;
        total += sum;
    }
    rep.kf = total / Rational(2);
    const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    rep.kappa = solve_linear_system(rep.r, ones);
    rep.resistance_regular =
        std::all_of(rep.ecc.begin(), rep.ecc.end(),
                    [&](const Rational& e) { return e == rep.ecc.front(); });

    // Defining identities: R*kappa = 1 row by row, and for resistance-regular
    // graphs the constant curvature equals 1/Omega(u) = n/(2*Kf). Violations
    // would mean the solver itself is broken.
    for (int u = 0; u < n; ++u) {
        Rational row(0);
        for (int v = 0; v < n; ++v) row += rep.r(u, v) * rep.kappa[static_cast<std::size_t>(v)];
        if (row != Rational(1))
            throw std::logic_error("analyze: R*kappa = 1 failed to hold exactly");
    }
    const bool kappa_constant =
        std::all_of(rep.kappa.begin(), rep.kappa.end(),
                    [&](const Rational& k) { return k == rep.kappa.front(); });
    if (kappa_constant != rep.resistance_regular)
        throw std::logic_error("analyze: constant curvature and resistance-regularity disagree");
    if (rep.resistance_regular) {
        const Rational k = rep.kappa.front();
        if (k != rep.ecc.front().reciprocal() || k != Rational(n) / (Rational(2) * rep.kf))
            throw std::logic_error("analyze: constant curvature identities failed");
        rep.constant_curvature = k;
    }
    return rep;
}

Rational resistive_eccentricity(const ResistanceReport& report, int u) {
    if (u < 0 || u >= report.n)
        throw std::invalid_argument("resistive_eccentricity: vertex out of range");
    return report.ecc[static_cast<std::size_t>(u)];
}

Rational kirchhoff_index(const ResistanceReport& report) { return report.kf; }

nlohmann::ordered_json report_to_json(const ResistanceReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    auto rows = nlohmann::ordered_json::array();
    for (int u = 0; u < report.n; ++u) {
        auto row = nlohmann::ordered_json::array();
        for (int v = 0; v < report.n; ++v) row.push_back(report.r(u, v).str());
        rows.push_back(std::move(row));
    }
    j["resistance_matrix"] = std::move(rows);
    auto ecc = nlohmann::ordered_json::array();
    for (const Rational& e : report.ecc) ecc.push_back(e.str());
    j["eccentricities"] = std::move(ecc);
    j["kirchhoff_index"] = report.kf.str();
    auto kappa = nlohmann::ordered_json::array();
    for (const Rational& k : report.kappa) kappa.push_back(k.str());
    j["curvature"] = std::move(kappa);
    j["resistance_regular"] = report.resistance_regular;
    if (report.constant_curvature)
        j["constant_curvature"] = report.constant_curvature->str();
    else
        j["constant_curvature"] = nullptr;
    return j;
}

Rational CycleClosedForms::pair_resistance(int distance) const {
    if (distance < 0 || 2 * distance > n)
        throw std::invalid_argument("pair_resistance: distance must satisfy 0 <= d <= n/2");
    return Rational(static_cast<long>(distance) * (n - distance), n);
}

CycleClosedForms cycle_closed_forms(int n) {
    if (n < 3) throw std::invalid_argument("cycle_closed_forms: cycles need n >= 3");
    CycleClosedForms f;
    f.n = n;
    f.eccentricity = Rational(static_cast<long>(n) * n - 1, 6);
    f.kirchhoff = Rational(static_cast<long>(n) * n * n - n, 12);
    f.curvature = Rational(6, static_cast<long>(n) * n - 1);
    return f;
}

CompleteClosedForms complete_closed_forms(int n) {
    if (n < 2) throw std::invalid_argument("complete_closed_forms: needs n >= 2");
    CompleteClosedForms f;
    f.n = n;
    f.pair_resistance = Rational(2, n);
    f.kirchhoff = Rational(n - 1);
    f.curvature = Rational(n, 2 * n - 2);
    return f;
}

CutComposition compose_across_cut(const Matrix<Rational>& r1, const Matrix<Rational>& r2,
                                  int x1, int x2) {
    if (r1.rows() != r1.cols() || r2.rows() != r2.cols())
        throw std::invalid_argument("compose_across_cut: matrices must be square");
    const int n1 = static_cast<int>(r1.rows());
    const int n2 = static_cast<int>(r2.rows());
    if (x1 < 0 || x1 >= n1 || x2 < 0 || x2 >= n2)
        throw std::invalid_argument("compose_across_cut: cut vertex out of range");
    const int n = n1 + n2 - 1;
    CutComposition out;
    out.r = Matrix<Rational>(n, n);
    out.h2_to_union.assign(static_cast<std::size_t>(n2), 0);
    for (int w = 0; w < n2; ++w) {
        if (w == x2)
            out.h2_to_union[static_cast<std::size_t>(w)] = x1;
        else
            out.h2_to_union[static_cast<std::size_t>(w)] = n1 + (w < x2 ? w : w - 1);
    }
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n1; ++v) out.r(u, v) = r1(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v)
            out.r(out.h2_to_union[static_cast<std::size_t>(u)],
                  out.h2_to_union[static_cast<std::size_t>(v)]) = r2(u, v);
    // Every walk between the two sides passes through the cut vertex, so the
    // resistances add.
    for (int u = 0; u < n1; ++u) {
        if (u == x1) continue;
        for (int w = 0; w < n2; ++w) {
            if (w == x2) continue;
            const int v = out.h2_to_union[static_cast<std::size_t>(w)];
            out.r(u, v) = r1(u, x1) + r2(x2, w);
            out.r(v, u) = out.r(u, v);
        }
    }
    return out;
}

Matrix<Rational> block_accelerated_resistance(const Graph& g) {
    require_connected(g, "block_accelerated_resistance");
    const int n = g.vertex_count();
    if (n == 1) return Matrix<Rational>(1, 1);
    const BlockDecomposition decomp = block_cut_decomposition(g);
    const auto solve_block = [&](const std::vector<int>& block) {
        Graph h(static_cast<int>(block.size()));
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                if (g.has_edge(block[a], block[b]))
                    h.add_edge(static_cast<int>(a), static_cast<int>(b));
        return resistance_matrix(h);
    };
    if (decomp.blocks.size() == 1) return resistance_matrix(g);

    // Grow the matrix block by block; pos[v] is v's index in the current
    // matrix, -1 while unattached. Each remaining block meets the attached
    // region in exactly one cut vertex (the block-cut tree is a tree).
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    Matrix<Rational> cur = solve_block(decomp.blocks.front());
    for (std::size_t a = 0; a < decomp.blocks.front().size(); ++a)
        pos[static_cast<std::size_t>(decomp.blocks.front()[a])] = static_cast<int>(a);
    std::vector<bool> attached(decomp.blocks.size(), false);
    attached[0] = true;
    for (std::size_t round = 1; round < decomp.blocks.size(); ++round) {
        std::size_t pick = decomp.blocks.size();
        int cut = -1;
        for (std::size_t b = 0; b < decomp.blocks.size() && pick == decomp.blocks.size(); ++b) {
            if (attached[b]) continue;
            for (int v : decomp.blocks[b]) {
                if (pos[static_cast<std::size_t>(v)] >= 0) {
                    pick = b;
                    cut = v;
                    break;
                }
            }
        }
        if (pick == decomp.blocks.size())
            throw std::logic_error("block_accelerated_resistance: disconnected block-cut tree");
        const std::vector<int>& block = decomp.blocks[pick];
        const auto it = std::find(block.begin(), block.end(), cut);
        const int x2 = static_cast<int>(it - block.begin());
        CutComposition comp =
            compose_across_cut(cur, solve_block(block), pos[static_cast<std::size_t>(cut)], x2);
        cur = std::move(comp.r);
        for (std::size_t w = 0; w < block.size(); ++w)
            pos[static_cast<std::size_t>(block[w])] = comp.h2_to_union[w];
        attached[pick] = true;
    }
    Matrix<Rational> out(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            out(u, v) = cur(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return out;
}

ExactSummary exact_resistance_summary(const Graph& g) {
    require_connected(g, "exact_resistance_summary");
    const int n = g.vertex_count();
    ExactSummary s;
    s.ecc.assign(static_cast<std::size_t>(n), Rational(0));
    if (n == 1) {
        s.kf = Rational(0);
        s.regular = true;
        return s;
    }
    if (auto gi = grounded_inverse_int(g)) {
        // Row sums of the resistance numerators stay far below int64 limits
        // under the fast-path Hadamard guard (<= 4e15 per entry, n <= 13).
        long long total = 0;
        std::vector<long long> row(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const long long num = resistance_num(*gi, u, v);
                row[static_cast<std::size_t>(u)] += num;
                row[static_cast<std::size_t>(v)] += num;
                total += num;
            }
        bool regular = true;
        for (int u = 0; u < n; ++u) {
            s.ecc[static_cast<std::size_t>(u)] = Rational(row[static_cast<std::size_t>(u)], gi->det);
            regular = regular && row[static_cast<std::size_t>(u)] == row.front();
        }
        s.kf = Rational(total, gi->det);
        s.regular = regular;
        return s;
    }
    const Matrix<Rational> r = resistance_matrix(g);
    Rational total(0);
    for (int u = 0; u < n; ++u) {
        Rational sum(0);
        for (int v = 0; v < n; ++v) sum += r(u, v);
        s.ecc[static_cast<std::size_t>(u)] = sum;
        total += sum;
    }
    s.kf = total / Rational(2);
    s.regular = std::all_of(s.ecc.begin(), s.ecc.end(),
                            [&](const Rational& e) { return e == s.ecc.front(); });
    return s;
}

FloatSummary float_resistance_summary(const Graph& g) {
    const int n = g.vertex_count();
    FloatSummary s;
    s.ecc.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 1) return s;
    const Matrix<double> r = resistance_matrix_real(g);
    double total = 0;
    for (int u = 0; u < n; ++u) {
        double sum = 0;
        for (int v = 0; v < n; ++v) sum += r(u, v);
        s.ecc[static_cast<std::size_t>(u)] = sum;
        total += sum;
    }
    s.kf = total / 2;
    const auto [lo, hi] = std::minmax_element(s.ecc.begin(), s.ecc.end());
    s.ecc_min = *lo;
    s.ecc_max = *hi;
    return s;
}

} // namespace ohmcurve
