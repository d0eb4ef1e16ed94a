#ifndef OHMCURVE_LINALG_HPP
#define OHMCURVE_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "ohmcurve/errors.hpp"
#include "ohmcurve/matrix.hpp"
#include "ohmcurve/rational.hpp"

namespace ohmcurve {
namespace detail {

// Relative pivot threshold for the floating-point path.
inline constexpr double kPivotTolerance = 1e-12;

// Gaussian elimination of [a | rhs] in place. Exact domain uses the first
// nonzero pivot in the column; float domain uses partial pivoting and flags
// pivots below kPivotTolerance of the row scale as numerically singular.
template <class T>
void eliminate(Matrix<T>& m, std::size_t n) {
    constexpr bool exact = std::is_same_v<T, Rational>;
    std::vector<double> scale;
    if constexpr (!exact) {
        scale.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                scale[i] = std::max(scale[i], std::abs(m(i, j)));
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        if constexpr (exact) {
            while (pivot_row < n && m(pivot_row, k).is_zero()) ++pivot_row;
            if (pivot_row == n)
                throw SingularMatrixError(SingularMatrixError::Kind::structural,
                                          "structurally singular: zero pivot column " + std::to_string(k));
        } else {
            double best = std::abs(m(k, k));
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(m(i, k)) > best) { best = std::abs(m(i, k)); pivot_row = i; }
            double s = scale[pivot_row] > 0 ? scale[pivot_row] : 1.0;
            if (best < kPivotTolerance * s)
                throw SingularMatrixError(SingularMatrixError::Kind::numerical,
                                          "numerically singular: pivot below tolerance in column " + std::to_string(k));
        }
        m.swap_rows(k, pivot_row);
        if constexpr (!exact) std::swap(scale[k], scale[pivot_row]);

        const T pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if constexpr (exact) {
                if (m(i, k).is_zero()) continue;
            } else {
                if (m(i, k) == 0.0) continue;
            }
            T factor = m(i, k) / pivot;
            m(i, k) = T(0);
            for (std::size_t j = k + 1; j < m.cols(); ++j)
                m(i, j) -= factor * m(k, j);
        }
    }
}

template <class T>
void back_substitute(const Matrix<T>& m, std::size_t n, Matrix<T>& out) {
    const std::size_t r = m.cols() - n; // rhs column count
    for (std::size_t c = 0; c < r; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            T sum = m(ii, n + c);
            for (std::size_t j = ii + 1; j < n; ++j)
                sum -= m(ii, j) * out(j, c);
            out(ii, c) = sum / m(ii, ii);
        }
    }
}

template <class T>
Matrix<T> solve_multi(const Matrix<T>& a, const Matrix<T>& rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("solve: matrix not square");
    if (rhs.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<T> m(n, n + rhs.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j) m(i, n + j) = rhs(i, j);
    }
    eliminate(m, n);
    Matrix<T> x(n, rhs.cols());
    back_substitute(m, n, x);
    return x;
}

} // namespace detail

// Solves a*x = b. Exact in the Rational domain, backward-stable in double.
template <class T>
std::vector<T> solve_linear_system(const Matrix<T>& a, const std::vector<T>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<T> rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    Matrix<T> x = detail::solve_multi(a, rhs);
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = x(i, 0);
    return out;
}

template <class T>
Matrix<T> invert(const Matrix<T>& a) {
    return detail::solve_multi(a, Matrix<T>::identity(a.rows()));
}

} // namespace ohmcurve

#endif
