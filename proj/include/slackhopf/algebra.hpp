// Finite-dimensional algebras given by structure constants, comagma
// structures (an algebra morphism Delta: A -> A (x) A, no coassociativity
// assumed), and the enveloping algebra A^e = A^op (x) A.
//
// The multiplication tensor is stored as the n x n^2 matrix of
// m: A (x) A -> A in the global flat basis, so column i*n + j holds the
// coordinates of e_i * e_j. Elements of A are coordinate vectors, elements
// of A^{(x)k} are TensorElements.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slackhopf/tensor.hpp"

namespace slackhopf {

template <class K>
class FinDimAlgebra {
public:
    FinDimAlgebra() = default;
    FinDimAlgebra(Field<K> field, std::vector<std::string> basis_names, Mat<K> mult, Vec<K> unit)
        : field_(field), names_(std::move(basis_names)), mult_(std::move(mult)), unit_(std::move(unit)) {
        n_ = unit_.size();
        if (mult_.rows() != n_ || mult_.cols() != n_ * n_)
            throw DimensionMismatch("multiplication tensor must be n x n^2");
        if (static_cast<Eigen::Index>(names_.size()) != n_)
            throw DimensionMismatch("basis name count does not match dimension");
        left_.reserve(static_cast<std::size_t>(n_));
        right_.reserve(static_cast<std::size_t>(n_));
        for (Eigen::Index i = 0; i < n_; ++i) {
            Mat<K> l(n_, n_), r(n_, n_);
            for (Eigen::Index j = 0; j < n_; ++j) {
                l.col(j) = mult_.col(i * n_ + j); // e_i * e_j
                r.col(j) = mult_.col(j * n_ + i); // e_j * e_i
            }
            left_.push_back(std::move(l));
            right_.push_back(std::move(r));
        }
    }

    Eigen::Index dim() const { return n_; }
    const Field<K>& field() const { return field_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Mat<K>& mult_matrix() const { return mult_; }
    const Vec<K>& unit() const { return unit_; }

    Vec<K> basis_vec(Eigen::Index i) const {
        Vec<K> v = Vec<K>::Constant(n_, field_.zero());
        v(i) = field_.one();
        return v;
    }

    // left/right regular representations of basis vectors
    const Mat<K>& left_basis(Eigen::Index i) const { return left_[static_cast<std::size_t>(i)]; }
    const Mat<K>& right_basis(Eigen::Index i) const { return right_[static_cast<std::size_t>(i)]; }

    Mat<K> left_rep(const Vec<K>& x) const {
        Mat<K> m = Mat<K>::Constant(n_, n_, field_.zero());
        for (Eigen::Index i = 0; i < n_; ++i)
            if (!x(i).is_zero()) m += left_[static_cast<std::size_t>(i)] * x(i);
        return m;
    }

    Mat<K> right_rep(const Vec<K>& x) const {
        Mat<K> m = Mat<K>::Constant(n_, n_, field_.zero());
        for (Eigen::Index i = 0; i < n_; ++i)
            if (!x(i).is_zero()) m += right_[static_cast<std::size_t>(i)] * x(i);
        return m;
    }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const { return mult_ * kron_vec<K>(x, y); }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const { return mul(mul(x, y), z); }

    // invertibility in A, decided by the left regular representation
    std::optional<Vec<K>> invert_element(const Vec<K>& x) const {
        InvertResult<K> r = solve_or_invert(field_, left_rep(x));
        if (!r.invertible()) return std::nullopt;
        return Vec<K>(*r.inverse * unit_);
    }

private:
    Field<K> field_;
    Eigen::Index n_ = 0;
    std::vector<std::string> names_;
    Mat<K> mult_;
    Vec<K> unit_;
    std::vector<Mat<K>> left_, right_;
};

template <class K>
TensorElement<K> tensor_from_vec(Eigen::Index dim, int rank, Vec<K> coeffs) {
    return TensorElement<K>(rank, dim, std::move(coeffs));
}

template <class K>
TensorElement<K> unit_tensor(const FinDimAlgebra<K>& a, int rank) {
    TensorElement<K> t(1, a.dim(), a.unit());
    TensorElement<K> r = t;
    for (int i = 1; i < rank; ++i) r = tensor_outer(r, t);
    return r;
}

template <class K>
void accumulate_outer(const FinDimAlgebra<K>& a, TensorElement<K>& out, const K& c,
                      const std::vector<Eigen::Index>& si, const std::vector<Eigen::Index>& ti,
                      int slot, Eigen::Index base);

// Componentwise product on A^{(x)k}: the algebra structure of the k-fold
// tensor power, (x_1 (x) ... (x) x_k)(y_1 (x) ... (x) y_k) = x_1 y_1 (x) ... (x) x_k y_k.
template <class K>
TensorElement<K> tensor_pointwise_product(const FinDimAlgebra<K>& a, const TensorElement<K>& s,
                                          const TensorElement<K>& t) {
    if (s.rank != t.rank || s.dim != t.dim || s.dim != a.dim())
        throw DimensionMismatch("pointwise tensor product operands");
    const Eigen::Index n = a.dim();
    const int k = s.rank;
    TensorElement<K> out = TensorElement<K>::zero(a.field(), k, n);

    std::vector<Eigen::Index> si(static_cast<std::size_t>(k), 0), ti(static_cast<std::size_t>(k), 0);
    const Eigen::Index total = pow_index(n, k);
    for (Eigen::Index fs = 0; fs < total; ++fs) {
        if (s.coeffs(fs).is_zero()) continue;
        Eigen::Index rem = fs;
        for (int m = k - 1; m >= 0; --m) { si[static_cast<std::size_t>(m)] = rem % n; rem /= n; }
        for (Eigen::Index ft = 0; ft < total; ++ft) {
            if (t.coeffs(ft).is_zero()) continue;
            rem = ft;
            for (int m = k - 1; m >= 0; --m) { ti[static_cast<std::size_t>(m)] = rem % n; rem /= n; }
            const K c = s.coeffs(fs) * t.coeffs(ft);
            // accumulate c * prod_m (e_{si[m]} e_{ti[m]}) as an outer product
            // of multiplication-table columns, slot 0 outermost
            accumulate_outer(a, out, c, si, ti, 0, 0);
        }
    }
    return out;
}

template <class K>
void accumulate_outer(const FinDimAlgebra<K>& a, TensorElement<K>& out, const K& c,
                      const std::vector<Eigen::Index>& si, const std::vector<Eigen::Index>& ti,
                      int slot, Eigen::Index base) {
    const Eigen::Index n = a.dim();
    const auto col = a.mult_matrix().col(si[static_cast<std::size_t>(slot)] * n + ti[static_cast<std::size_t>(slot)]);
    const bool last = (slot + 1 == static_cast<int>(si.size()));
    for (Eigen::Index r = 0; r < n; ++r) {
        if (col(r).is_zero()) continue;
        if (last)
            out.coeffs(base * n + r) += c * col(r);
        else
            accumulate_outer(a, out, K(c * col(r)), si, ti, slot + 1, base * n + r);
    }
}

// ---------------------------------------------------------------------------
// Enveloping algebra A^e = A^op (x) A, product (x (x) y) . (z (x) t) = zx (x) yt.
// Elements are rank-2 tensors over A.
// ---------------------------------------------------------------------------

// matrix of zeta |-> xi . zeta on the flat basis of A (x) A
template <class K>
Mat<K> env_left_rep(const FinDimAlgebra<K>& a, const TensorElement<K>& xi) {
    if (xi.rank != 2 || xi.dim != a.dim()) throw DimensionMismatch("enveloping element must have rank 2");
    const Eigen::Index n = a.dim();
    Mat<K> rep = Mat<K>::Constant(n * n, n * n, a.field().zero());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const K& c = xi.coeffs(i * n + j);
            if (c.is_zero()) continue;
            rep += kron<K>(a.right_basis(i), a.left_basis(j)) * c;
        }
    return rep;
}

template <class K>
TensorElement<K> env_product(const FinDimAlgebra<K>& a, const TensorElement<K>& x, const TensorElement<K>& y) {
    if (y.rank != 2 || y.dim != a.dim()) throw DimensionMismatch("enveloping element must have rank 2");
    return tensor_from_vec<K>(a.dim(), 2, Vec<K>(env_left_rep(a, x) * y.coeffs));
}

// Membership test for (A^e)^x. A one-sided inverse in a finite-dimensional
// algebra is two-sided, so invertibility of the left regular representation
// decides it.
template <class K>
std::optional<TensorElement<K>> env_invert(const FinDimAlgebra<K>& a, const TensorElement<K>& x) {
    InvertResult<K> r = solve_or_invert(a.field(), env_left_rep(a, x));
    if (!r.invertible()) return std::nullopt;
    return tensor_from_vec<K>(a.dim(), 2, Vec<K>(*r.inverse * unit_tensor(a, 2).coeffs));
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

template <class K>
ValidationReport validate_algebra(const FinDimAlgebra<K>& a) {
    ValidationReport rep;
    const Eigen::Index n = a.dim();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            // L(e_i e_j) = L(e_i) L(e_j) packs associativity over all k at once
            Mat<K> lhs = a.left_rep(Vec<K>(a.mult_matrix().col(i * n + j)));
            Mat<K> rhs = a.left_basis(i) * a.left_basis(j);
            rep.require(is_zero_mat<K>(lhs - rhs),
                        "associativity fails at basis pair (" + a.basis_names()[i] + ", " + a.basis_names()[j] + ")");
        }
    for (Eigen::Index i = 0; i < n; ++i) {
        Vec<K> e = a.basis_vec(i);
        rep.require(is_zero_vec<K>(Vec<K>(a.mul(a.unit(), e) - e)),
                    "left unit axiom fails at basis index " + std::to_string(i));
        rep.require(is_zero_vec<K>(Vec<K>(a.mul(e, a.unit()) - e)),
                    "right unit axiom fails at basis index " + std::to_string(i));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Comagma algebras
// ---------------------------------------------------------------------------

template <class K>
struct ComagmaAlgebra {
    FinDimAlgebra<K> alg;
    Mat<K> delta; // n^2 x n, column i = Delta(e_i) in the flat basis

    ComagmaAlgebra() = default;
    ComagmaAlgebra(FinDimAlgebra<K> a, Mat<K> d) : alg(std::move(a)), delta(std::move(d)) {
        if (delta.rows() != alg.dim() * alg.dim() || delta.cols() != alg.dim())
            throw DimensionMismatch("coproduct matrix must be n^2 x n");
    }

    TensorElement<K> delta_of(const Vec<K>& x) const {
        return tensor_from_vec<K>(alg.dim(), 2, Vec<K>(delta * x));
    }
};

template <class K>
ValidationReport validate_comagma(const ComagmaAlgebra<K>& c) {
    ValidationReport rep;
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();
    rep.require(c.delta_of(a.unit()) == unit_tensor(a, 2), "Delta(1) != 1 (x) 1");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            TensorElement<K> lhs = c.delta_of(Vec<K>(a.mult_matrix().col(i * n + j)));
            TensorElement<K> rhs = tensor_pointwise_product(a, c.delta_of(a.basis_vec(i)), c.delta_of(a.basis_vec(j)));
            rep.require(lhs == rhs, "Delta not multiplicative at basis pair (" + a.basis_names()[i] + ", " +
                                        a.basis_names()[j] + ")");
        }
    return rep;
}

// (A, Delta_t) with Delta_t(x) = t Delta(x) t^{-1}, products in A (x) A.
// Requires an exact two-sided unit pair in the componentwise algebra.
template <class K>
ComagmaAlgebra<K> conjugate_coproduct(const ComagmaAlgebra<K>& c, const TensorElement<K>& t,
                                      const TensorElement<K>& t_inv) {
    const auto& a = c.alg;
    if (tensor_pointwise_product(a, t, t_inv) != unit_tensor(a, 2) ||
        tensor_pointwise_product(a, t_inv, t) != unit_tensor(a, 2))
        throw NotAUnit("t * t_inv != 1 (x) 1 in A (x) A");
    Mat<K> d(a.dim() * a.dim(), a.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        TensorElement<K> conj =
            tensor_pointwise_product(a, tensor_pointwise_product(a, t, c.delta_of(a.basis_vec(i))), t_inv);
        d.col(i) = conj.coeffs;
    }
    return ComagmaAlgebra<K>(a, std::move(d));
}

} // namespace slackhopf
