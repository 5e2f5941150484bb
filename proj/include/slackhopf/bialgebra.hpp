// Counits, the derived antipode data (sigma, a, b), the convolution algebra,
// and the antipode construction for bialgebras carrying a slack structure:
//
//     sigma = (eps (x) A) nabla,  a = (eps (x) A) w,  b = (eps (x) A) v,
//
// and, when a is invertible in A, S(x) = a^{-1} sigma(x) a is a convolution
// inverse of the identity.
#pragma once

#include "slackhopf/slackhopf.hpp"

namespace slackhopf {

template <class K>
struct CounitData {
    Mat<K> eps; // 1 x n
    bool algebra_morphism = false;
    bool left_counit = false;      // (eps (x) A) Delta = id
    bool bialgebra_counit = false; // additionally (A (x) eps) Delta = id

    K of(const Vec<K>& x) const { return (eps * x)(0); }
};

template <class K>
CounitData<K> make_counit(const ComagmaAlgebra<K>& c, Mat<K> eps_row) {
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();
    if (eps_row.rows() != 1 || eps_row.cols() != n) throw DimensionMismatch("counit must be a 1 x n row");

    CounitData<K> eps;
    eps.eps = std::move(eps_row);

    bool morphism = (eps.of(a.unit()) == field.one());
    for (Eigen::Index i = 0; i < n && morphism; ++i)
        for (Eigen::Index j = 0; j < n && morphism; ++j)
            morphism = (eps.of(Vec<K>(a.mult_matrix().col(i * n + j))) ==
                        eps.of(a.basis_vec(i)) * eps.of(a.basis_vec(j)));
    eps.algebra_morphism = morphism;

    // (eps (x) A) Delta and (A (x) eps) Delta as n x n matrices
    Mat<K> left(n, n), right(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        TensorElement<K> d = c.delta_of(a.basis_vec(i));
        left.col(i) = tensor_contract(field, d, {{0, eps.eps}}).coeffs;
        right.col(i) = tensor_contract(field, d, {{1, eps.eps}}).coeffs;
    }
    eps.left_counit = morphism && is_zero_mat<K>(Mat<K>(left - identity(field, n)));
    eps.bialgebra_counit = eps.left_counit && is_zero_mat<K>(Mat<K>(right - identity(field, n)));
    return eps;
}

// sum over xi of xi^(1-leg through sl) . mid . xi^(2), with an optional map on
// the first leg; the workhorse behind the counit identities
template <class K>
Vec<K> sandwich(const FinDimAlgebra<K>& a, const TensorElement<K>& xi, const Mat<K>* first_leg_map,
                const Vec<K>& mid) {
    const Eigen::Index n = a.dim();
    Vec<K> acc = Vec<K>::Constant(n, a.field().zero());
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
            const K& c = xi.coeffs(p * n + q);
            if (c.is_zero()) continue;
            Vec<K> lhs = first_leg_map ? Vec<K>(first_leg_map->col(p)) : a.basis_vec(p);
            acc += a.mul(a.mul(lhs, mid), a.basis_vec(q)) * c;
        }
    return acc;
}

template <class K>
struct AntipodeData {
    Mat<K> sigma;   // n x n, an algebra antimorphism
    Vec<K> a_elem;  // (eps (x) A) w
    Vec<K> b_elem;  // (eps (x) A) v
    std::optional<Mat<K>> S;
};

// Derives (sigma, a, b) from a certificate and a left counit, and checks the
// four identities they satisfy:
//   (1) sigma(x_(1)) a x_(2) = a eps(x)      (2) nabla^(1)(x) b nabla^(2)(x) = b eps(x)
//   (3) w^(1) b w^(2) = 1                    (4) sigma(v^(1)) a v^(2) = 1
template <class K>
AntipodeData<K> extract_antipode_data(const SlackHopfCertificate<K>& cert, const ComagmaAlgebra<K>& c,
                                      const CounitData<K>& eps) {
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();
    if (!eps.algebra_morphism || !eps.left_counit)
        throw IdentityViolation("extract_antipode_data needs at least a left counit");

    AntipodeData<K> data;
    data.sigma = Mat<K>(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        data.sigma.col(i) = tensor_contract(field, cert.nabla_of(a, a.basis_vec(i)), {{0, eps.eps}}).coeffs;
    data.a_elem = tensor_contract(field, cert.w, {{0, eps.eps}}).coeffs;
    data.b_elem = tensor_contract(field, cert.v, {{0, eps.eps}}).coeffs;

    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec<K> e = a.basis_vec(i);
        Vec<K> lhs1 = sandwich(a, c.delta_of(e), &data.sigma, data.a_elem);
        if (!is_zero_vec<K>(Vec<K>(lhs1 - data.a_elem * eps.of(e))))
            throw IdentityViolation("sigma(x_(1)) a x_(2) != a eps(x) at basis " + std::to_string(i));
        Vec<K> lhs2 = sandwich<K>(a, cert.nabla_of(a, e), nullptr, data.b_elem);
        if (!is_zero_vec<K>(Vec<K>(lhs2 - data.b_elem * eps.of(e))))
            throw IdentityViolation("nabla^(1)(x) b nabla^(2)(x) != b eps(x) at basis " + std::to_string(i));
    }
    if (!is_zero_vec<K>(Vec<K>(sandwich<K>(a, cert.w, nullptr, data.b_elem) - a.unit())))
        throw IdentityViolation("w^(1) b w^(2) != 1");
    if (!is_zero_vec<K>(Vec<K>(sandwich(a, cert.v, &data.sigma, data.a_elem) - a.unit())))
        throw IdentityViolation("sigma(v^(1)) a v^(2) != 1");
    return data;
}

// f * g = m (f (x) g) Delta on endomorphisms of A; unit is u . eps.
template <class K>
Mat<K> convolution(const Mat<K>& f, const Mat<K>& g, const ComagmaAlgebra<K>& c, const CounitData<K>& eps) {
    if (!eps.bialgebra_counit) throw IdentityViolation("convolution needs a bialgebra counit");
    return Mat<K>(c.alg.mult_matrix() * kron<K>(f, g) * c.delta);
}

template <class K>
Mat<K> convolution_unit(const ComagmaAlgebra<K>& c, const CounitData<K>& eps) {
    return Mat<K>(c.alg.unit() * eps.eps);
}

enum class AntipodeKind { Antipode, LeftInverseOnly, NoAntipode };

template <class K>
struct AntipodeResult {
    AntipodeKind kind = AntipodeKind::NoAntipode;
    std::optional<Mat<K>> S;
};

// S(x) = a^{-1} sigma(x) a when a is invertible in A. Both convolution axioms
// are verified even though the right one is automatic in finite dimension.
template <class K>
AntipodeResult<K> build_antipode(const AntipodeData<K>& data, const ComagmaAlgebra<K>& c,
                                 const CounitData<K>& eps) {
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();
    if (!eps.bialgebra_counit) throw IdentityViolation("build_antipode needs a bialgebra counit");

    auto a_inv = a.invert_element(data.a_elem);
    if (!a_inv) return AntipodeResult<K>{AntipodeKind::NoAntipode, std::nullopt};

    Mat<K> s(n, n);
    for (Eigen::Index j = 0; j < n; ++j) s.col(j) = a.mul(*a_inv, Vec<K>(data.sigma.col(j)), data.a_elem);

    const Mat<K> id = identity(a.field(), n);
    const Mat<K> unit_map = convolution_unit(c, eps);
    const bool left_axiom = is_zero_mat<K>(Mat<K>(convolution(s, id, c, eps) - unit_map));
    const bool right_axiom = is_zero_mat<K>(Mat<K>(convolution(id, s, c, eps) - unit_map));
    if (!left_axiom)
        throw IdentityViolation("a^{-1} sigma(.) a is not a left convolution inverse of id");
    return AntipodeResult<K>{right_axiom ? AntipodeKind::Antipode : AntipodeKind::LeftInverseOnly, std::move(s)};
}

} // namespace slackhopf
