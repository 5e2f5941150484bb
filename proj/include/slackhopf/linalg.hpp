// Dense exact linear algebra on Eigen matrices over an exact field scalar.
//
// Row reduction is fraction-free (Bareiss) over the rationals to bound
// intermediate swell, and plain Gauss-Jordan over GF(p). Both paths produce
// a reduced row echelon form together with the transform matrix, from which
// exact inverses and kernel bases are read off.
#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "slackhopf/errors.hpp"
#include "slackhopf/scalar.hpp"

namespace slackhopf {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
bool is_zero_mat(const Mat<K>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

template <class K>
Mat<K> identity(const Field<K>& field, Eigen::Index n) {
    Mat<K> m = Mat<K>::Constant(n, n, field.zero());
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

// Kronecker product in the global row-major index convention:
// (A (x) B)(i*rB + k, j*cB + l) = A(i,j) * B(k,l).
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return c;
}

// e_i (x) e_j -> index i*dim(y) + j.
template <class K>
Vec<K> kron_vec(const Vec<K>& x, const Vec<K>& y) {
    Vec<K> r(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (Eigen::Index j = 0; j < y.size(); ++j)
            r(i * y.size() + j) = x(i) * y(j);
    return r;
}

namespace detail {

// Scales a row to integral entries before Bareiss elimination. No-op for GF(p).
inline Rational integral_row_scale(const Eigen::Ref<const Eigen::Matrix<Rational, 1, Eigen::Dynamic>>& row) {
    mpz_class l(1);
    for (Eigen::Index j = 0; j < row.size(); ++j)
        l = lcm(l, row(j).denominator());
    return Rational(mpq_class(l));
}

} // namespace detail

template <class K>
struct RowReduction {
    Mat<K> rref;                 // reduced row echelon form of the input
    Mat<K> transform;            // transform * input == rref
    std::vector<Eigen::Index> pivot_cols;
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <class K>
RowReduction<K> row_reduce(const Field<K>& field, Mat<K> a) {
    const Eigen::Index m = a.rows(), n = a.cols();
    Mat<K> t = identity(field, m);

    if constexpr (std::is_same_v<K, Rational>) {
        // clear denominators row-wise; the scaling is folded into the transform
        for (Eigen::Index i = 0; i < m; ++i) {
            Rational s = detail::integral_row_scale(a.row(i));
            a.row(i) *= s;
            t(i, i) = s;
        }
    }

    std::vector<Eigen::Index> pivots;
    K prev = field.one();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < m; ++c) {
        Eigen::Index pr = -1;
        for (Eigen::Index i = r; i < m; ++i)
            if (!a(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r) {
            a.row(pr).swap(a.row(r));
            t.row(pr).swap(t.row(r));
        }
        const K pivot = a(r, c);
        for (Eigen::Index i = r + 1; i < m; ++i) {
            const K factor = a(i, c);
            if constexpr (std::is_same_v<K, Rational>) {
                // fraction-free update: entries stay integral, divisions exact
                a.row(i) = (a.row(i) * pivot - a.row(r) * factor) / prev;
                t.row(i) = (t.row(i) * pivot - t.row(r) * factor) / prev;
            } else {
                if (factor.is_zero()) continue;
                const K f = factor / pivot;
                a.row(i) -= a.row(r) * f;
                t.row(i) -= t.row(r) * f;
            }
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }

    // back-substitute to reduced form, then normalize pivots to one
    for (Eigen::Index k = static_cast<Eigen::Index>(pivots.size()) - 1; k >= 0; --k) {
        const Eigen::Index c = pivots[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < k; ++i) {
            const K f = a(i, c) / a(k, c);
            if (f.is_zero()) continue;
            a.row(i) -= a.row(k) * f;
            t.row(i) -= t.row(k) * f;
        }
        const K inv = a(k, c).inverse();
        a.row(k) *= inv;
        t.row(k) *= inv;
    }

    return RowReduction<K>{std::move(a), std::move(t), std::move(pivots)};
}

template <class K>
struct InvertResult {
    std::optional<Mat<K>> inverse;   // set iff the matrix is invertible
    std::vector<Vec<K>> kernel;      // maximal kernel basis otherwise

    bool invertible() const { return inverse.has_value(); }
};

// Decides invertibility exactly. Returns the two-sided inverse, or a maximal
// basis of the kernel of a singular square matrix.
template <class K>
InvertResult<K> solve_or_invert(const Field<K>& field, const Mat<K>& m) {
    if (m.rows() != m.cols()) throw NonSquare();
    const Eigen::Index n = m.rows();
    RowReduction<K> red = row_reduce(field, m);
    if (red.rank() == n)
        return InvertResult<K>{std::move(red.transform), {}};

    InvertResult<K> res;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Eigen::Index c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec<K> x = Vec<K>::Constant(n, field.zero());
        x(f) = field.one();
        for (Eigen::Index r = 0; r < red.rank(); ++r)
            x(red.pivot_cols[static_cast<std::size_t>(r)]) = -red.rref(r, f);
        res.kernel.push_back(std::move(x));
    }
    return res;
}

// Solves m*x = b for square m; empty when m is singular (even if b happens to
// be in the column span -- callers here only need the invertible case).
template <class K>
std::optional<Vec<K>> solve(const Field<K>& field, const Mat<K>& m, const Vec<K>& b) {
    InvertResult<K> inv = solve_or_invert(field, m);
    if (!inv.invertible()) return std::nullopt;
    return Vec<K>(*inv.inverse * b);
}

// Particular solution of a possibly rectangular system a*x = b, free
// variables set to zero; empty when inconsistent.
template <class K>
std::optional<Vec<K>> solve_affine(const Field<K>& field, const Mat<K>& a, const Vec<K>& b) {
    const Eigen::Index m = a.rows(), n = a.cols();
    Mat<K> aug(m, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    RowReduction<K> red = row_reduce(field, aug);
    for (Eigen::Index c : red.pivot_cols)
        if (c == n) return std::nullopt;
    Vec<K> x = Vec<K>::Constant(n, field.zero());
    for (Eigen::Index r = 0; r < red.rank(); ++r)
        x(red.pivot_cols[static_cast<std::size_t>(r)]) = red.rref(r, n);
    return x;
}

} // namespace slackhopf
