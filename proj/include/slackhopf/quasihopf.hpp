// Quasi-bialgebras (A, Delta, eps, phi) with an invertible associator, the
// quasi-antipode axioms QA1-QA4, the left Hopf structure built from a
// quasi-antipode, slackness, and the classification of slack structures:
//
//     wbar  = phi^(1) (x) sigma(phi^(2)) a phi^(3),
//     sl(v) = wbar^(1) v^(1)_(1) (x) sigma(v^(1)_(2)) wbar^(2) v^(2),
//
// sl(v) = 1 (x) 1 exactly when v comes from a quasi-antipode, and sl(v) is
// invertible in A^e exactly when the quasi-bialgebra is quasi-Hopf, in which
// case v = v0 <| sl(v) for a unique left Hopf structure v0.
#pragma once

#include "slackhopf/bialgebra.hpp"

namespace slackhopf {

template <class K>
struct QuasiBialgebra {
    ComagmaAlgebra<K> comagma;
    CounitData<K> eps;
    TensorElement<K> phi;     // rank 3
    TensorElement<K> phi_inv; // rank 3

    const FinDimAlgebra<K>& alg() const { return comagma.alg; }
};

// the matrix of id^{(x)slot} (x) Delta (x) id^{(x)(rank-1-slot)} on A^{(x)rank}
template <class K>
Mat<K> delta_on_slot(const ComagmaAlgebra<K>& c, int rank, int slot) {
    const auto& field = c.alg.field();
    const Eigen::Index n = c.alg.dim();
    Mat<K> op = c.delta;
    if (slot > 0) op = kron<K>(identity(field, pow_index(n, slot)), op);
    if (slot < rank - 1) op = kron<K>(op, identity(field, pow_index(n, rank - 1 - slot)));
    return op;
}

template <class K>
ValidationReport validate_quasibialgebra(const QuasiBialgebra<K>& q) {
    ValidationReport rep;
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();

    rep.merge(validate_algebra(a));
    rep.merge(validate_comagma(c));
    rep.require(q.eps.algebra_morphism, "counit is not an algebra morphism");
    rep.require(q.eps.bialgebra_counit, "counit does not satisfy (eps (x) A)Delta = id = (A (x) eps)Delta");
    rep.require(q.phi.rank == 3 && q.phi_inv.rank == 3 && q.phi.dim == n && q.phi_inv.dim == n,
                "associator must be a rank-3 tensor over A");
    if (!rep.ok()) return rep;

    const TensorElement<K> unit3 = unit_tensor(a, 3);
    rep.require(tensor_pointwise_product(a, q.phi, q.phi_inv) == unit3, "phi . phi^{-1} != 1 (x) 1 (x) 1");
    rep.require(tensor_pointwise_product(a, q.phi_inv, q.phi) == unit3, "phi^{-1} . phi != 1 (x) 1 (x) 1");

    // pentagon: (A (x) A (x) Delta)(phi) . (Delta (x) A (x) A)(phi)
    //         = (1 (x) phi) . (A (x) Delta (x) A)(phi) . (phi (x) 1)
    {
        auto lift = [&](int slot) {
            return tensor_from_vec<K>(n, 4, Vec<K>(delta_on_slot(c, 3, slot) * q.phi.coeffs));
        };
        TensorElement<K> lhs = tensor_pointwise_product(a, lift(2), lift(0));
        TensorElement<K> one_phi = tensor_outer(unit_tensor(a, 1), q.phi);
        TensorElement<K> phi_one = tensor_outer(q.phi, unit_tensor(a, 1));
        TensorElement<K> rhs = tensor_pointwise_product(a, tensor_pointwise_product(a, one_phi, lift(1)), phi_one);
        rep.require(lhs == rhs, "pentagon identity fails");
    }

    // quasi-coassociativity: phi . (Delta (x) A)Delta(x) = (A (x) Delta)Delta(x) . phi
    {
        const Mat<K> d_first = delta_on_slot(c, 2, 0);
        const Mat<K> d_second = delta_on_slot(c, 2, 1);
        for (Eigen::Index i = 0; i < n; ++i) {
            TensorElement<K> left_assoc = tensor_from_vec<K>(n, 3, Vec<K>(d_first * c.delta.col(i)));
            TensorElement<K> right_assoc = tensor_from_vec<K>(n, 3, Vec<K>(d_second * c.delta.col(i)));
            rep.require(tensor_pointwise_product(a, q.phi, left_assoc) ==
                            tensor_pointwise_product(a, right_assoc, q.phi),
                        "quasi-coassociativity fails at basis index " + std::to_string(i));
        }
    }

    // counit triangles
    const TensorElement<K> unit2 = unit_tensor(a, 2);
    rep.require(tensor_contract(field, q.phi, {{0, q.eps.eps}}) == unit2, "(eps (x) A (x) A) phi != 1 (x) 1");
    rep.require(tensor_contract(field, q.phi, {{1, q.eps.eps}}) == unit2, "(A (x) eps (x) A) phi != 1 (x) 1");
    rep.require(tensor_contract(field, q.phi, {{2, q.eps.eps}}) == unit2, "(A (x) A (x) eps) phi != 1 (x) 1");
    return rep;
}

template <class K>
struct QuasiAntipode {
    Mat<K> S;       // algebra antimorphism A -> A
    Vec<K> a_elem;
    Vec<K> b_elem;
};

namespace detail {

// sum over phi of phi^(1) (x) (L2 phi^(2)) . mid . (L3 phi^(3)); a null map is
// the identity. Covers Schauenburg's v and w and their sigma-analogues.
template <class K>
TensorElement<K> phi_pair(const FinDimAlgebra<K>& a, const TensorElement<K>& phi, const Mat<K>* leg2,
                          const Vec<K>& mid, const Mat<K>* leg3) {
    const Eigen::Index n = a.dim();
    TensorElement<K> out = TensorElement<K>::zero(a.field(), 2, n);
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q)
            for (Eigen::Index r = 0; r < n; ++r) {
                const K& c = phi.coeffs((p * n + q) * n + r);
                if (c.is_zero()) continue;
                Vec<K> l2 = leg2 ? Vec<K>(leg2->col(q)) : a.basis_vec(q);
                Vec<K> l3 = leg3 ? Vec<K>(leg3->col(r)) : a.basis_vec(r);
                Vec<K> second = a.mul(a.mul(l2, mid), l3);
                for (Eigen::Index s = 0; s < n; ++s)
                    if (!second(s).is_zero()) out.coeffs(p * n + s) += c * second(s);
            }
    return out;
}

} // namespace detail

template <class K>
ValidationReport check_quasi_antipode(const QuasiBialgebra<K>& q, const QuasiAntipode<K>& qa) {
    ValidationReport rep;
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();

    rep.require(is_zero_vec<K>(Vec<K>(qa.S * a.unit() - a.unit())), "S(1) != 1");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Vec<K> lhs = qa.S * a.mul(a.basis_vec(i), a.basis_vec(j));
            Vec<K> rhs = a.mul(Vec<K>(qa.S.col(j)), Vec<K>(qa.S.col(i)));
            rep.require(is_zero_vec<K>(Vec<K>(lhs - rhs)),
                        "S is not an antimorphism at basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }

    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec<K> e = a.basis_vec(i);
        // QA1: S(x_(1)) a x_(2) = a eps(x)
        Vec<K> qa1 = sandwich(a, c.delta_of(e), &qa.S, qa.a_elem);
        rep.require(is_zero_vec<K>(Vec<K>(qa1 - qa.a_elem * q.eps.of(e))),
                    "QA1 fails at basis index " + std::to_string(i));
        // QA2: x_(1) b S(x_(2)) = b eps(x)
        TensorElement<K> d = c.delta_of(e);
        Vec<K> qa2 = Vec<K>::Constant(n, a.field().zero());
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index r = 0; r < n; ++r) {
                const K& dc = d.coeffs(p * n + r);
                if (dc.is_zero()) continue;
                qa2 += a.mul(a.mul(a.basis_vec(p), qa.b_elem), Vec<K>(qa.S.col(r))) * dc;
            }
        rep.require(is_zero_vec<K>(Vec<K>(qa2 - qa.b_elem * q.eps.of(e))),
                    "QA2 fails at basis index " + std::to_string(i));
    }

    // QA3: phi^(1) b S(phi^(2)) a phi^(3) = 1
    {
        Vec<K> acc = Vec<K>::Constant(n, a.field().zero());
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index r = 0; r < n; ++r)
                for (Eigen::Index s = 0; s < n; ++s) {
                    const K& pc = q.phi.coeffs((p * n + r) * n + s);
                    if (pc.is_zero()) continue;
                    Vec<K> t = a.mul(a.basis_vec(p), qa.b_elem);
                    t = a.mul(t, Vec<K>(qa.S.col(r)));
                    t = a.mul(t, qa.a_elem);
                    t = a.mul(t, a.basis_vec(s));
                    acc += t * pc;
                }
        rep.require(is_zero_vec<K>(Vec<K>(acc - a.unit())), "QA3 fails");
    }
    // QA4: S(phi^(-1)) a phi^(-2) b S(phi^(-3)) = 1
    {
        Vec<K> acc = Vec<K>::Constant(n, a.field().zero());
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index r = 0; r < n; ++r)
                for (Eigen::Index s = 0; s < n; ++s) {
                    const K& pc = q.phi_inv.coeffs((p * n + r) * n + s);
                    if (pc.is_zero()) continue;
                    Vec<K> t = a.mul(Vec<K>(qa.S.col(p)), qa.a_elem);
                    t = a.mul(t, a.basis_vec(r));
                    t = a.mul(t, qa.b_elem);
                    t = a.mul(t, Vec<K>(qa.S.col(s)));
                    acc += t * pc;
                }
        rep.require(is_zero_vec<K>(Vec<K>(acc - a.unit())), "QA4 fails");
    }
    return rep;
}

// v = phi^(-1) (x) phi^(-2) b S(phi^(-3)) is a slack left Hopf structure with
// the closed-form inverse H^{v,-1}(x (x) y) = w^(1) x_(1) (x) S(x_(2)) w^(2) y,
// w = phi^(1) (x) S(phi^(2)) a phi^(3). The closed form is compared to the
// matrix inverse entrywise; any mismatch signals an invalid quasi-antipode.
template <class K>
SlackHopfCertificate<K> left_hopf_from_antipode(const QuasiBialgebra<K>& q, const QuasiAntipode<K>& qa) {
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();

    TensorElement<K> v = detail::phi_pair<K>(a, q.phi_inv, nullptr, qa.b_elem, &qa.S);
    TensorElement<K> w = detail::phi_pair<K>(a, q.phi, &qa.S, qa.a_elem, nullptr);

    SlackCheckResult<K> chk = check_slack_structure(c, v);
    if (!chk.slack()) throw InverseMismatch("H^v built from the quasi-antipode is singular");
    SlackHopfCertificate<K> cert = std::move(*chk.cert);
    if (cert.w != w) throw InverseMismatch("w from the quasi-antipode disagrees with (H^v)^{-1}(1 (x) 1)");

    // assemble the closed-form inverse and compare
    Mat<K> closed(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const TensorElement<K> d = c.delta_of(a.basis_vec(i));
        for (Eigen::Index j = 0; j < n; ++j) {
            TensorElement<K> acc = TensorElement<K>::zero(a.field(), 2, n);
            for (Eigen::Index p = 0; p < n; ++p)
                for (Eigen::Index r = 0; r < n; ++r) {
                    const K& dc = d.coeffs(p * n + r);
                    if (dc.is_zero()) continue;
                    for (Eigen::Index s = 0; s < n; ++s)
                        for (Eigen::Index t = 0; t < n; ++t) {
                            const K& wc = w.coeffs(s * n + t);
                            if (wc.is_zero()) continue;
                            Vec<K> first = a.mul(a.basis_vec(s), a.basis_vec(p));
                            Vec<K> second = a.mul(a.mul(Vec<K>(qa.S.col(r)), a.basis_vec(t)), a.basis_vec(j));
                            acc.coeffs += kron_vec<K>(first, second) * (dc * wc);
                        }
                }
            closed.col(i * n + j) = acc.coeffs;
        }
    }
    if (!is_zero_mat<K>(Mat<K>(closed - cert.Hv_inv)))
        throw InverseMismatch("closed-form inverse disagrees with the matrix inverse of H^v");
    return cert;
}

// K^t(x (x) y) = t^(1) x_(1) (x) sigma(x_(2)) t^(2) y
template <class K>
Mat<K> k_matrix(const ComagmaAlgebra<K>& c, const Mat<K>& sigma, const TensorElement<K>& t) {
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();
    Mat<K> m(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const TensorElement<K> d = c.delta_of(a.basis_vec(i));
        // K^t(e_i (x) 1); the y factor is appended per column below
        TensorElement<K> acc = TensorElement<K>::zero(a.field(), 2, n);
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = 0; q < n; ++q) {
                const K& dc = d.coeffs(p * n + q);
                if (dc.is_zero()) continue;
                for (Eigen::Index r = 0; r < n; ++r)
                    for (Eigen::Index s = 0; s < n; ++s) {
                        const K& tc = t.coeffs(r * n + s);
                        if (tc.is_zero()) continue;
                        Vec<K> first = a.mul(a.basis_vec(r), a.basis_vec(p));
                        Vec<K> second = a.mul(Vec<K>(sigma.col(q)), a.basis_vec(s));
                        acc.coeffs += kron_vec<K>(first, second) * (dc * tc);
                    }
            }
        for (Eigen::Index j = 0; j < n; ++j)
            m.col(i * n + j) = tensor_contract(a.field(), acc, {{1, a.right_basis(j)}}).coeffs;
    }
    return m;
}

template <class K>
struct Slackness {
    TensorElement<K> value; // sl(v), an element of A^e
    TensorElement<K> wbar;
    Mat<K> sigma;           // (eps (x) A) nabla, recorded for reuse
    Vec<K> a_elem;          // (eps (x) A) w
};

// Slackness of a certificate over a quasi-bialgebra; sigma is always derived
// from the certificate's nabla, never from a candidate antipode.
template <class K>
Slackness<K> slackness(const QuasiBialgebra<K>& q, const SlackHopfCertificate<K>& cert) {
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();

    Slackness<K> sl;
    sl.sigma = Mat<K>(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        sl.sigma.col(i) = tensor_contract(field, cert.nabla_of(a, a.basis_vec(i)), {{0, q.eps.eps}}).coeffs;
    sl.a_elem = tensor_contract(field, cert.w, {{0, q.eps.eps}}).coeffs;
    sl.wbar = detail::phi_pair<K>(a, q.phi, &sl.sigma, sl.a_elem, nullptr);
    sl.value = tensor_from_vec<K>(n, 2, Vec<K>(k_matrix(c, sl.sigma, sl.wbar) * cert.v.coeffs));

    TensorElement<K> first_leg = tensor_contract(field, sl.value, {{0, q.eps.eps}});
    if (!is_zero_vec<K>(Vec<K>(first_leg.coeffs - a.unit())))
        throw IdentityViolation("(eps (x) A) sl(v) != 1");
    return sl;
}

template <class K>
struct LeftHopfVerdict {
    QuasiAntipode<K> qa;
};

template <class K>
struct SlackOnlyVerdict {
    TensorElement<K> sl;
    bool invertible_in_env = false;
};

template <class K>
using Classification = std::variant<LeftHopfVerdict<K>, SlackOnlyVerdict<K>>;

// sl(v) = 1 (x) 1 iff v is a left Hopf structure, in which case the
// quasi-antipode is (sigma, a, b) and the closed forms
// nabla = (A (x) sigma)Delta, w = wbar, v = vbar hold; all are asserted.
template <class K>
Classification<K> classify_slack_structure(const QuasiBialgebra<K>& q, const SlackHopfCertificate<K>& cert) {
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();

    Slackness<K> sl = slackness(q, cert);
    if (sl.value != unit_tensor(a, 2)) {
        bool inv = env_invert(a, sl.value).has_value();
        return SlackOnlyVerdict<K>{std::move(sl.value), inv};
    }

    QuasiAntipode<K> qa;
    qa.S = sl.sigma;
    qa.a_elem = sl.a_elem;
    qa.b_elem = tensor_contract(field, cert.v, {{0, q.eps.eps}}).coeffs;

    Mat<K> nabla_expected = kron<K>(identity(field, n), qa.S) * c.delta;
    if (!is_zero_mat<K>(Mat<K>(nabla_expected - cert.nabla)))
        throw IdentityViolation("left Hopf certificate violates nabla = (A (x) sigma) Delta");
    if (cert.w != sl.wbar) throw IdentityViolation("left Hopf certificate violates w = wbar");
    TensorElement<K> vbar = detail::phi_pair<K>(a, q.phi_inv, nullptr, qa.b_elem, &qa.S);
    if (cert.v != vbar) throw IdentityViolation("left Hopf certificate violates v = vbar");
    return LeftHopfVerdict<K>{std::move(qa)};
}

template <class K>
struct TorsorDecomposition {
    TensorElement<K> v0;    // the unique left Hopf structure with v = v0 <| gamma
    TensorElement<K> gamma; // = sl(v), an element of G_0(A)
    QuasiAntipode<K> qa;    // (sigma, a, b') generating v0
    SlackHopfCertificate<K> cert0;
};

// Splits v into a left Hopf structure and a G_0(A) torsor factor. Returns
// nothing when sl(v) is not invertible in A^e (the quasi-bialgebra is not
// quasi-Hopf).
template <class K>
std::optional<TorsorDecomposition<K>> torsor_decompose(const QuasiBialgebra<K>& q,
                                                       const SlackHopfCertificate<K>& cert) {
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const auto& field = a.field();

    Slackness<K> sl = slackness(q, cert);
    auto gamma_inv = env_invert(a, sl.value);
    if (!gamma_inv) return std::nullopt;

    TorsorDecomposition<K> dec;
    dec.gamma = sl.value;
    dec.v0 = torsor_act(cert, *gamma_inv);

    dec.qa.S = sl.sigma;
    dec.qa.a_elem = sl.a_elem;
    Vec<K> b = tensor_contract(field, cert.v, {{0, q.eps.eps}}).coeffs;
    dec.qa.b_elem = sandwich<K>(a, *gamma_inv, nullptr, b); // b' = gammabar^(1) b gammabar^(2)

    ValidationReport qa_rep = check_quasi_antipode(q, dec.qa);
    if (!qa_rep.ok()) throw IdentityViolation("torsor decomposition produced an invalid quasi-antipode: " +
                                              qa_rep.violations.front());
    dec.cert0 = left_hopf_from_antipode(q, dec.qa);
    if (dec.cert0.v != dec.v0)
        throw InverseMismatch("quasi-antipode from the decomposition does not regenerate v0");
    if (torsor_act(dec.cert0, dec.gamma) != cert.v)
        throw InverseMismatch("torsor round trip v0 <| gamma != v fails");
    return dec;
}

} // namespace slackhopf
