#ifndef OHMCURVE_RESISTANCE_HPP
#define OHMCURVE_RESISTANCE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "ohmcurve/graph.hpp"
#include "ohmcurve/linalg.hpp"
#include "ohmcurve/matrix.hpp"
#include "ohmcurve/rational.hpp"

namespace ohmcurve {

// Combinatorial Laplacian: degree on the diagonal, -1 per edge.
template <class T>
Matrix<T> laplacian(const Graph& g) {
    const int n = g.vertex_count();
    Matrix<T> l(n, n);
    for (int u = 0; u < n; ++u) {
        l(u, u) = T(g.degree(u));
        g.for_neighbors(u, [&](int v) { l(u, v) = T(-1); });
    }
    return l;
}

// Pairwise effective resistances with every edge a unit resistor, computed
// through the Laplacian grounded at vertex 0. Exact; throws on disconnected
// input. n = 1 yields the 1x1 zero matrix.
Matrix<Rational> resistance_matrix(const Graph& g);

// Floating-point mirror of resistance_matrix, used by the enumeration screen.
Matrix<double> resistance_matrix_real(const Graph& g);

// Unique exact solution of R*kappa = 1. Throws for n = 1 (R = [[0]] is
// singular) and for disconnected input.
std::vector<Rational> curvature_vector(const Graph& g);

struct ResistanceReport {
    int n = 0;
    Matrix<Rational> r;
    std::vector<Rational> ecc;  // row sums of r
    Rational kf;                // half the total of ecc
    std::vector<Rational> kappa;
    bool resistance_regular = false;
    std::optional<Rational> constant_curvature;
};

// Full per-graph bundle with the defining identities cross-checked: the
// report is internally consistent or analyze throws. Requires n >= 2,
// connected.
ResistanceReport analyze(const Graph& g);

Rational resistive_eccentricity(const ResistanceReport& report, int u);
Rational kirchhoff_index(const ResistanceReport& report);

// {n, resistance_matrix, eccentricities, kirchhoff_index, curvature,
//  resistance_regular, constant_curvature} with rationals as "p/q" strings.
nlohmann::ordered_json report_to_json(const ResistanceReport& report);

// Closed forms for the two extremal families.
struct CycleClosedForms {
    int n;
    Rational eccentricity;   // (n^2 - 1)/6
    Rational kirchhoff;      // (n^3 - n)/12
    Rational curvature;      // 6/(n^2 - 1)
    Rational pair_resistance(int distance) const; // d(n-d)/n, 0 <= d <= n/2
};
CycleClosedForms cycle_closed_forms(int n); // n >= 3

struct CompleteClosedForms {
    int n;
    Rational pair_resistance; // 2/n
    Rational kirchhoff;       // n - 1
    Rational curvature;       // n/(2n - 2)
};
CompleteClosedForms complete_closed_forms(int n); // n >= 2

// Resistance matrix of G from the resistance matrix of G' = G - {i,j},
// restoring the deleted edge:
//   R(p,q) = R'(p,q) - [R'(p,i) + R'(q,j) - R'(p,j) - R'(q,i)]^2
//                      / (4*(1 + R'(i,j)))
// The diagonal of the result is forced to zero.
template <class T>
Matrix<T> deletion_update(const Matrix<T>& r_prime, int i, int j) {
    if (r_prime.rows() != r_prime.cols())
        throw std::invalid_argument("deletion_update: matrix is not square");
    const int n = static_cast<int>(r_prime.rows());
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("deletion_update: endpoint out of range");
    if (i == j)
        throw std::invalid_argument("deletion_update: endpoints coincide");
    const T denom = T(4) * (T(1) + r_prime(i, j));
    Matrix<T> r(n, n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const T bracket =
                r_prime(p, i) + r_prime(q, j) - r_prime(p, j) - r_prime(q, i);
            const T value = r_prime(p, q) - bracket * bracket / denom;
            r(p, q) = value;
            r(q, p) = value;
        }
    }
    return r;
}

// Resistance matrix of two graphs glued at a cut vertex: x2 of the second
// matrix is identified with x1 of the first. Cross entries are
// R1(u,x1) + R2(x2,v); entries within either side are unchanged. The first
// graph keeps its indices; h2_to_union maps the second graph's indices into
// the union (x2 maps onto x1, the rest shift after the first graph).
struct CutComposition {
    Matrix<Rational> r;
    std::vector<int> h2_to_union;
};
CutComposition compose_across_cut(const Matrix<Rational>& r1, const Matrix<Rational>& r2,
                                  int x1, int x2);

// Same output as resistance_matrix, assembled by solving each block of the
// block-cut tree independently and composing across cut vertices.
Matrix<Rational> block_accelerated_resistance(const Graph& g);

// Lean per-graph summaries for enumeration sweeps.
struct ExactSummary {
    std::vector<Rational> ecc;
    Rational kf;
    bool regular = false;
};
ExactSummary exact_resistance_summary(const Graph& g);

struct FloatSummary {
    std::vector<double> ecc;
    double kf = 0;
    double ecc_min = 0, ecc_max = 0;
};
FloatSummary float_resistance_summary(const Graph& g);

} // namespace ohmcurve

#endif
