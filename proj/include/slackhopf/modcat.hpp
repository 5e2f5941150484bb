// Finite-dimensional A-modules and the internal Hom structure a slack Hopf
// certificate induces on A-Mod: the action a.f = f <| nabla(a) with
// (f <| xi)(x) = xi^(1) f(xi^(2) x), evaluation e(f (x) x) = w^(1) f(w^(2) x),
// coevaluation h(y)(x) = v^(1) y (x) v^(2) x, comparison morphisms twisted by
// the slackness, and left duals when the slackness is invertible.
//
// A linear map f: V -> W is stored as a d_W x d_V matrix; its carrier
// coordinate vector is the row-major flattening (entry (r, c) at r*d_V + c),
// consistent with the global tensor index convention.
#pragma once

#include "slackhopf/quasihopf.hpp"

namespace slackhopf {

template <class K>
struct AModule {
    Eigen::Index dim = 0;
    std::vector<Mat<K>> action; // action[i] = rho(e_i), one d x d matrix per algebra basis vector

    Mat<K> act(const FinDimAlgebra<K>& a, const Vec<K>& x) const {
        Mat<K> m = Mat<K>::Constant(dim, dim, a.field().zero());
        for (Eigen::Index i = 0; i < a.dim(); ++i)
            if (!x(i).is_zero()) m += action[static_cast<std::size_t>(i)] * x(i);
        return m;
    }
};

template <class K>
ValidationReport validate_module(const FinDimAlgebra<K>& a, const AModule<K>& v) {
    ValidationReport rep;
    const Eigen::Index n = a.dim();
    rep.require(static_cast<Eigen::Index>(v.action.size()) == n, "module action table has wrong arity");
    if (!rep.ok()) return rep;
    rep.require(is_zero_mat<K>(Mat<K>(v.act(a, a.unit()) - identity(a.field(), v.dim))), "rho(1) != id");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Mat<K> lhs = v.action[static_cast<std::size_t>(i)] * v.action[static_cast<std::size_t>(j)];
            Mat<K> rhs = v.act(a, Vec<K>(a.mult_matrix().col(i * n + j)));
            rep.require(is_zero_mat<K>(Mat<K>(lhs - rhs)),
                        "rho(e_i) rho(e_j) != rho(e_i e_j) at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    return rep;
}

template <class K>
AModule<K> regular_module(const FinDimAlgebra<K>& a) {
    AModule<K> v;
    v.dim = a.dim();
    for (Eigen::Index i = 0; i < a.dim(); ++i) v.action.push_back(a.left_basis(i));
    return v;
}

template <class K>
AModule<K> trivial_module(const FinDimAlgebra<K>& a, const CounitData<K>& eps) {
    AModule<K> v;
    v.dim = 1;
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        Mat<K> m(1, 1);
        m(0, 0) = eps.of(a.basis_vec(i));
        v.action.push_back(std::move(m));
    }
    return v;
}

// V (x) W with the diagonal action through Delta.
template <class K>
AModule<K> tensor_module(const ComagmaAlgebra<K>& c, const AModule<K>& v, const AModule<K>& w) {
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();
    AModule<K> t;
    t.dim = v.dim * w.dim;
    for (Eigen::Index i = 0; i < n; ++i) {
        Mat<K> m = Mat<K>::Constant(t.dim, t.dim, a.field().zero());
        const TensorElement<K> d = c.delta_of(a.basis_vec(i));
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = 0; q < n; ++q) {
                const K& dc = d.coeffs(p * n + q);
                if (dc.is_zero()) continue;
                m += kron<K>(v.action[static_cast<std::size_t>(p)], w.action[static_cast<std::size_t>(q)]) * dc;
            }
        t.action.push_back(std::move(m));
    }
    return t;
}

// f |-> phi . f on carriers, for phi: W -> W'
template <class K>
Mat<K> hom_postcompose(const Field<K>& field, const Mat<K>& phi, Eigen::Index dv) {
    return kron<K>(phi, identity(field, dv));
}

// f |-> f . psi on carriers, for psi: V' -> V
template <class K>
Mat<K> hom_precompose(const Field<K>& field, const Mat<K>& psi, Eigen::Index dw) {
    return kron<K>(identity(field, dw), Mat<K>(psi.transpose()));
}

// carrier matrix of f |-> xi^(1) f (xi^(2) .) for xi in A^e
template <class K>
Mat<K> hom_right_action(const FinDimAlgebra<K>& a, const TensorElement<K>& xi, const AModule<K>& v,
                        const AModule<K>& w) {
    const Eigen::Index n = a.dim();
    Mat<K> m = Mat<K>::Constant(w.dim * v.dim, w.dim * v.dim, a.field().zero());
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
            const K& c = xi.coeffs(p * n + q);
            if (c.is_zero()) continue;
            m += kron<K>(w.action[static_cast<std::size_t>(p)],
                         Mat<K>(v.action[static_cast<std::size_t>(q)].transpose())) *
                 c;
        }
    return m;
}

template <class K>
struct InternalHom {
    AModule<K> carrier; // Hom_k(V, W) with a.f = f <| nabla(a)
    Mat<K> eval;        // d_W x (d_W d_V . d_V), e(f (x) x) = w^(1) f(w^(2) x)
    Mat<K> coeval;      // (d_W d_V . d_V) x d_W into Hom(V, W (x) V), h(y)(x) = v^(1) y (x) v^(2) x
};

template <class K>
InternalHom<K> internal_hom(const ComagmaAlgebra<K>& c, const SlackHopfCertificate<K>& cert, const AModule<K>& v,
                            const AModule<K>& w) {
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();
    if (!validate_module(a, v).ok() || !validate_module(a, w).ok())
        throw ModuleAxiomViolation("internal_hom requires valid modules");

    InternalHom<K> ih;
    ih.carrier.dim = w.dim * v.dim;
    for (Eigen::Index i = 0; i < n; ++i)
        ih.carrier.action.push_back(hom_right_action(a, cert.nabla_of(a, a.basis_vec(i)), v, w));
    if (!validate_module(a, ih.carrier).ok())
        throw IdentityViolation("internal Hom carrier fails the module axioms");

    // eval(t, (r*dV+s)*dV + c) = sum_w w_pq rho_W(p)(t,r) rho_V(q)(s,c)
    ih.eval = Mat<K>::Constant(w.dim, ih.carrier.dim * v.dim, field.zero());
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
            const K& wc = cert.w.coeffs(p * n + q);
            if (wc.is_zero()) continue;
            const Mat<K>& mw = w.action[static_cast<std::size_t>(p)];
            const Mat<K>& mv = v.action[static_cast<std::size_t>(q)];
            for (Eigen::Index t = 0; t < w.dim; ++t)
                for (Eigen::Index r = 0; r < w.dim; ++r) {
                    if (mw(t, r).is_zero()) continue;
                    for (Eigen::Index s = 0; s < v.dim; ++s)
                        for (Eigen::Index cc = 0; cc < v.dim; ++cc)
                            ih.eval(t, (r * v.dim + s) * v.dim + cc) += wc * mw(t, r) * mv(s, cc);
                }
        }

    // coeval(((t*dV + s)*dV + c), m) = sum_v v_pq rho_W(p)(t,m) rho_V(q)(s,c)
    ih.coeval = Mat<K>::Constant(w.dim * v.dim * v.dim, w.dim, field.zero());
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
            const K& vc = cert.v.coeffs(p * n + q);
            if (vc.is_zero()) continue;
            const Mat<K>& mw = w.action[static_cast<std::size_t>(p)];
            const Mat<K>& mv = v.action[static_cast<std::size_t>(q)];
            for (Eigen::Index t = 0; t < w.dim; ++t)
                for (Eigen::Index m = 0; m < w.dim; ++m) {
                    if (mw(t, m).is_zero()) continue;
                    for (Eigen::Index s = 0; s < v.dim; ++s)
                        for (Eigen::Index cc = 0; cc < v.dim; ++cc)
                            ih.coeval((t * v.dim + s) * v.dim + cc, m) += vc * mw(t, m) * mv(s, cc);
                }
        }

    // A-linearity of evaluation: e(a.(f (x) x)) = a.e(f (x) x)
    {
        AModule<K> src = tensor_module(c, ih.carrier, v);
        for (Eigen::Index i = 0; i < n; ++i) {
            Mat<K> lhs = ih.eval * src.action[static_cast<std::size_t>(i)];
            Mat<K> rhs = w.action[static_cast<std::size_t>(i)] * ih.eval;
            if (!is_zero_mat<K>(Mat<K>(lhs - rhs)))
                throw IdentityViolation("evaluation is not A-linear at basis index " + std::to_string(i));
        }
    }
    // A-linearity of coevaluation into [V, W (x) V]
    {
        AModule<K> wv = tensor_module(c, w, v);
        for (Eigen::Index i = 0; i < n; ++i) {
            Mat<K> target_act = hom_right_action(a, cert.nabla_of(a, a.basis_vec(i)), v, wv);
            Mat<K> lhs = target_act * ih.coeval;
            Mat<K> rhs = ih.coeval * w.action[static_cast<std::size_t>(i)];
            if (!is_zero_mat<K>(Mat<K>(lhs - rhs)))
                throw IdentityViolation("coevaluation is not A-linear at basis index " + std::to_string(i));
        }
    }
    return ih;
}

// Both triangle identities of the adjunction ((.) (x) V) -| [V, (.)], as exact
// matrix identities on the underlying spaces.
template <class K>
ValidationReport check_adjunction_triangles(const ComagmaAlgebra<K>& c, const SlackHopfCertificate<K>& cert,
                                            const AModule<K>& v, const AModule<K>& w) {
    ValidationReport rep;
    const auto& field = c.alg.field();

    InternalHom<K> hom_vw = internal_hom(c, cert, v, w);
    AModule<K> wv = tensor_module(c, w, v);
    InternalHom<K> hom_v_wv = internal_hom(c, cert, v, wv);

    // (e_{V, W (x) V}) (h (x) id_V) = id on W (x) V
    Mat<K> tri1 = hom_v_wv.eval * kron<K>(hom_vw.coeval, identity(field, v.dim));
    rep.require(is_zero_mat<K>(Mat<K>(tri1 - identity(field, w.dim * v.dim))),
                "triangle (counit o F(unit)) fails");

    // [V, e] h^V_{[V,W]} = id on [V, W]
    InternalHom<K> hom_v_hom = internal_hom(c, cert, v, hom_vw.carrier);
    Mat<K> tri2 = hom_postcompose(field, hom_vw.eval, v.dim) * hom_v_hom.coeval;
    rep.require(is_zero_mat<K>(Mat<K>(tri2 - identity(field, hom_vw.carrier.dim))),
                "triangle (G(counit) o unit) fails");
    return rep;
}

// Comparison morphism W (x) V* -> Hom(V, W), x (x) f |-> (x o f) <| sl(v).
// With the shared index convention the canonical map x (x) f |-> x o f is the
// identity matrix, so the twist is exactly hom_right_action by sl(v).
template <class K>
Mat<K> comparison_morphism(const QuasiBialgebra<K>& q, const SlackHopfCertificate<K>& cert, const AModule<K>& v,
                           const AModule<K>& w) {
    Slackness<K> sl = slackness(q, cert);
    return hom_right_action(q.alg(), sl.value, v, w);
}

template <class K>
Mat<K> canonical_comparison(const Field<K>& field, const AModule<K>& v, const AModule<K>& w) {
    return identity(field, w.dim * v.dim);
}

template <class K>
struct DualData {
    AModule<K> dual; // V* with (a.f)(x) = f(S(a) x)
    Mat<K> ev;       // 1 x (d_V . d_V), f (x) x |-> f(a x)
    Mat<K> coev;     // (d_V . d_V) x 1, 1 |-> sum_i b e_i (x) e^i
};

// Left dual of V when the slackness is invertible (i.e. the quasi-bialgebra
// is quasi-Hopf); the zig-zag identities hold with the associator inserted
// and are checked exactly.
template <class K>
std::optional<DualData<K>> left_dual(const QuasiBialgebra<K>& q, const SlackHopfCertificate<K>& cert,
                                     const AModule<K>& v) {
    const auto& a = q.alg();
    const auto& field = a.field();
    const Eigen::Index n = a.dim();

    auto dec = torsor_decompose(q, cert);
    if (!dec) return std::nullopt;
    const QuasiAntipode<K>& qa = dec->qa;

    DualData<K> dd;
    dd.dual.dim = v.dim;
    for (Eigen::Index i = 0; i < n; ++i)
        dd.dual.action.push_back(Mat<K>(v.act(a, Vec<K>(qa.S.col(i))).transpose()));
    if (!validate_module(a, dd.dual).ok()) throw IdentityViolation("dual module fails the module axioms");

    const Mat<K> act_a = v.act(a, qa.a_elem);
    const Mat<K> act_b = v.act(a, qa.b_elem);
    dd.ev = Mat<K>::Constant(1, v.dim * v.dim, field.zero());
    for (Eigen::Index i = 0; i < v.dim; ++i)
        for (Eigen::Index cc = 0; cc < v.dim; ++cc) dd.ev(0, i * v.dim + cc) = act_a(i, cc);
    dd.coev = Mat<K>(v.dim * v.dim, 1);
    for (Eigen::Index ww = 0; ww < v.dim; ++ww)
        for (Eigen::Index i = 0; i < v.dim; ++i) dd.coev(ww * v.dim + i, 0) = act_b(ww, i);

    // A-linearity of ev and coev
    {
        AModule<K> dual_v = tensor_module(q.comagma, dd.dual, v);
        AModule<K> v_dual = tensor_module(q.comagma, v, dd.dual);
        for (Eigen::Index i = 0; i < n; ++i) {
            Mat<K> lhs = dd.ev * dual_v.action[static_cast<std::size_t>(i)];
            Mat<K> rhs = dd.ev * q.eps.of(a.basis_vec(i));
            if (!is_zero_mat<K>(Mat<K>(lhs - rhs)))
                throw IdentityViolation("duality evaluation is not A-linear");
            Mat<K> lhs2 = v_dual.action[static_cast<std::size_t>(i)] * dd.coev;
            Mat<K> rhs2 = dd.coev * q.eps.of(a.basis_vec(i));
            if (!is_zero_mat<K>(Mat<K>(lhs2 - rhs2)))
                throw IdentityViolation("duality coevaluation is not A-linear");
        }
    }

    // zig-zags with the associator inserted
    auto associator_action = [&](const AModule<K>& x, const AModule<K>& y, const AModule<K>& z,
                                 const TensorElement<K>& phi) {
        Mat<K> m = Mat<K>::Constant(x.dim * y.dim * z.dim, x.dim * y.dim * z.dim, field.zero());
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index r = 0; r < n; ++r)
                for (Eigen::Index s = 0; s < n; ++s) {
                    const K& c = phi.coeffs((p * n + r) * n + s);
                    if (c.is_zero()) continue;
                    m += kron<K>(x.action[static_cast<std::size_t>(p)],
                                 kron<K>(y.action[static_cast<std::size_t>(r)],
                                         z.action[static_cast<std::size_t>(s)])) *
                         c;
                }
        return m;
    };

    Mat<K> zig1 = kron<K>(identity(field, v.dim), dd.ev) * associator_action(v, dd.dual, v, q.phi) *
                  kron<K>(dd.coev, identity(field, v.dim));
    if (!is_zero_mat<K>(Mat<K>(zig1 - identity(field, v.dim))))
        throw IdentityViolation("left dual zig-zag (id (x) ev) a (coev (x) id) != id");
    Mat<K> zig2 = kron<K>(dd.ev, identity(field, v.dim)) * associator_action(dd.dual, v, dd.dual, q.phi_inv) *
                  kron<K>(identity(field, v.dim), dd.coev);
    if (!is_zero_mat<K>(Mat<K>(zig2 - identity(field, v.dim))))
        throw IdentityViolation("left dual zig-zag (ev (x) id) a^{-1} (id (x) coev) != id");
    return dd;
}

} // namespace slackhopf
