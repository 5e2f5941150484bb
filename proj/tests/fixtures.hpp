// Shared test fixtures: group algebras, the matrix algebra with the flipped
// coproduct, the idempotent monoid algebra, the 4-dimensional Hopf algebra
// with relations g^2 = 1, x^2 = 0, xg = -gx, and the quasi-bialgebra on
// k[Z/2] with associator 1 - 2 p (x) p (x) p for p = (1 - g)/2.
#pragma once

#include <array>
#include <numeric>

#include "slackhopf/modcat.hpp"
#include "slackhopf/fincat.hpp"

namespace fixtures {

using namespace slackhopf;

// --- group tables -----------------------------------------------------------

inline std::vector<std::vector<int>> cyclic_table(int m) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % m;
    return t;
}

inline std::vector<std::vector<int>> klein_table() {
    // Z/2 x Z/2 with elements coded as bit pairs
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
    return t;
}

// permutations of {0,1,2} in lexicographic order; composition (p*q)(x) = p(q(x))
inline std::vector<std::array<int, 3>> s3_elements() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

inline std::vector<std::vector<int>> s3_table() {
    auto perms = s3_elements();
    auto index_of = [&](const std::array<int, 3>& q) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x)
                comp[static_cast<std::size_t>(x)] =
                    perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(x)])];
            t[i][j] = index_of(comp);
        }
    return t;
}

inline std::vector<int> group_inverses(const std::vector<std::vector<int>>& table, int unit) {
    const int n = static_cast<int>(table.size());
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == unit &&
                table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == unit)
                inv[static_cast<std::size_t>(i)] = j;
    return inv;
}

// --- algebras ----------------------------------------------------------------

template <class K>
ComagmaAlgebra<K> group_algebra(const Field<K>& f, const std::vector<std::vector<int>>& table,
                                std::vector<std::string> names, int unit_idx = 0) {
    const Eigen::Index n = static_cast<Eigen::Index>(table.size());
    Mat<K> mult = Mat<K>::Constant(n, n * n, f.zero());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            mult(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], i * n + j) = f.one();
    Vec<K> unit = Vec<K>::Constant(n, f.zero());
    unit(unit_idx) = f.one();
    FinDimAlgebra<K> a(f, std::move(names), std::move(mult), std::move(unit));
    Mat<K> delta = Mat<K>::Constant(n * n, n, f.zero());
    for (Eigen::Index i = 0; i < n; ++i) delta(i * n + i, i) = f.one(); // group-like basis
    return ComagmaAlgebra<K>(std::move(a), std::move(delta));
}

template <class K>
ComagmaAlgebra<K> kz2(const Field<K>& f) {
    return group_algebra(f, cyclic_table(2), {"1", "g"});
}

template <class K>
ComagmaAlgebra<K> kz3(const Field<K>& f) {
    return group_algebra(f, cyclic_table(3), {"1", "g", "g2"});
}

template <class K>
ComagmaAlgebra<K> ks3(const Field<K>& f) {
    return group_algebra(f, s3_table(), {"p0", "p1", "p2", "p3", "p4", "p5"});
}

// the multiplicative monoid {1, z} with z^2 = z, Delta group-like
template <class K>
ComagmaAlgebra<K> bool_monoid_algebra(const Field<K>& f) {
    Mat<K> mult = Mat<K>::Constant(2, 4, f.zero());
    mult(0, 0) = f.one(); // 1*1 = 1
    mult(1, 1) = f.one(); // 1*z = z
    mult(1, 2) = f.one(); // z*1 = z
    mult(1, 3) = f.one(); // z*z = z
    Vec<K> unit = Vec<K>::Constant(2, f.zero());
    unit(0) = f.one();
    FinDimAlgebra<K> a(f, {"1", "z"}, std::move(mult), std::move(unit));
    Mat<K> delta = Mat<K>::Constant(4, 2, f.zero());
    delta(0, 0) = f.one();
    delta(3, 1) = f.one();
    return ComagmaAlgebra<K>(std::move(a), std::move(delta));
}

// all basis vectors group-like, so the counit is the all-ones row
template <class K>
CounitData<K> grouplike_counit(const ComagmaAlgebra<K>& c) {
    return make_counit(c, Mat<K>(Mat<K>::Constant(1, c.alg.dim(), c.alg.field().one())));
}

// M_n(k) with basis e_{ab} at index a*n + b
template <class K>
FinDimAlgebra<K> matrix_algebra(const Field<K>& f, int n) {
    const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
    Mat<K> mult = Mat<K>::Constant(d, d * d, f.zero());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    if (b != c) continue;
                    const Eigen::Index i = a * n + b, j = c * n + e;
                    mult(a * n + e, i * d + j) = f.one();
                }
    Vec<K> unit = Vec<K>::Constant(d, f.zero());
    for (int a = 0; a < n; ++a) unit(a * n + a) = f.one();
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) names.push_back("e" + std::to_string(a) + std::to_string(b));
    return FinDimAlgebra<K>(f, std::move(names), std::move(mult), std::move(unit));
}

// Delta(x) = x (x) 1
template <class K>
ComagmaAlgebra<K> comagma_right_unit(FinDimAlgebra<K> a) {
    const Eigen::Index n = a.dim();
    Mat<K> delta = Mat<K>::Constant(n * n, n, a.field().zero());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index u = 0; u < n; ++u)
            if (!a.unit()(u).is_zero()) delta(i * n + u, i) = a.unit()(u);
    return ComagmaAlgebra<K>(std::move(a), std::move(delta));
}

// the flip sum_{ij} e_ij (x) e_ji in M_n (x) M_n
template <class K>
TensorElement<K> flip_tensor(const FinDimAlgebra<K>& mn, int n) {
    TensorElement<K> t = TensorElement<K>::zero(mn.field(), 2, mn.dim());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at({i * n + j, j * n + i}) = mn.field().one();
    return t;
}

// M_2 with the coproduct conjugated by the flip: Delta_t(x) = 1 (x) x
template <class K>
ComagmaAlgebra<K> m2_flip(const Field<K>& f) {
    FinDimAlgebra<K> m2 = matrix_algebra(f, 2);
    TensorElement<K> t = flip_tensor(m2, 2);
    return conjugate_coproduct(comagma_right_unit(m2), t, t);
}

// 4-dimensional Hopf algebra, basis (1, g, x, gx), g^2 = 1, x^2 = 0, xg = -gx
template <class K>
ComagmaAlgebra<K> sweedler_h4(const Field<K>& f) {
    const Eigen::Index n = 4;
    Mat<K> mult = Mat<K>::Constant(n, n * n, f.zero());
    auto set = [&](int i, int j, int k, long coeff) { mult(k, i * n + j) = f.from_long(coeff); };
    for (int j = 0; j < 4; ++j) set(0, j, j, 1); // 1 * y = y
    set(1, 0, 1, 1);                             // g*1 = g
    set(1, 1, 0, 1);                             // g*g = 1
    set(1, 2, 3, 1);                             // g*x = gx
    set(1, 3, 2, 1);                             // g*gx = x
    set(2, 0, 2, 1);                             // x*1 = x
    set(2, 1, 3, -1);                            // x*g = -gx
    set(3, 0, 3, 1);                             // gx*1 = gx
    set(3, 1, 2, -1);                            // gx*g = -x
    Vec<K> unit = Vec<K>::Constant(n, f.zero());
    unit(0) = f.one();
    FinDimAlgebra<K> a(f, {"1", "g", "x", "gx"}, std::move(mult), std::move(unit));

    Mat<K> delta = Mat<K>::Constant(n * n, n, f.zero());
    delta(0 * n + 0, 0) = f.one();  // Delta(1) = 1 (x) 1
    delta(1 * n + 1, 1) = f.one();  // Delta(g) = g (x) g
    delta(2 * n + 0, 2) = f.one();  // Delta(x) = x (x) 1 + g (x) x
    delta(1 * n + 2, 2) = f.one();
    delta(3 * n + 1, 3) = f.one();  // Delta(gx) = gx (x) g + 1 (x) gx
    delta(0 * n + 3, 3) = f.one();
    return ComagmaAlgebra<K>(std::move(a), std::move(delta));
}

template <class K>
CounitData<K> h4_counit(const ComagmaAlgebra<K>& c) {
    Mat<K> eps = Mat<K>::Constant(1, 4, c.alg.field().zero());
    eps(0, 0) = c.alg.field().one();
    eps(0, 1) = c.alg.field().one();
    return make_counit(c, std::move(eps));
}

template <class K>
Mat<K> h4_antipode_table(const FinDimAlgebra<K>& a) {
    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    Mat<K> s = Mat<K>::Constant(4, 4, a.field().zero());
    s(0, 0) = a.field().one();
    s(1, 1) = a.field().one();
    s(3, 2) = a.field().from_long(-1);
    s(2, 3) = a.field().one();
    return s;
}

// --- quasi-bialgebras ---------------------------------------------------------

template <class K>
QuasiBialgebra<K> quasi_trivial(const ComagmaAlgebra<K>& c, const CounitData<K>& eps) {
    return QuasiBialgebra<K>{c, eps, unit_tensor(c.alg, 3), unit_tensor(c.alg, 3)};
}

// k[Z/2] with phi = 1 (x) 1 (x) 1 - 2 p (x) p (x) p, p = (1 - g)/2 idempotent;
// phi is its own inverse. Needs an invertible 2 in the field.
template <class K>
QuasiBialgebra<K> quasi_kz2(const Field<K>& f) {
    ComagmaAlgebra<K> c = kz2(f);
    const K half = f.from_long(2).inverse();
    Vec<K> p = Vec<K>::Constant(2, half);
    p(1) = -half; // (1 - g)/2
    TensorElement<K> ppp =
        tensor_outer(tensor_outer(TensorElement<K>(1, 2, p), TensorElement<K>(1, 2, p)), TensorElement<K>(1, 2, p));
    TensorElement<K> phi = unit_tensor(c.alg, 3);
    phi.coeffs -= ppp.coeffs * f.from_long(2);
    return QuasiBialgebra<K>{c, grouplike_counit(c), phi, phi};
}

// --- quasi-antipode fixture solver --------------------------------------------
//
// Exact solve over a finite parametrization: the caller supplies candidate
// antimorphisms S; the space of a's solving the first axiom is computed as a
// kernel, and for each small combination of that basis the remaining axioms
// are linear in b. Test-fixture generation only.

template <class K>
std::optional<QuasiAntipode<K>> solve_quasi_antipode(const QuasiBialgebra<K>& q,
                                                     const std::vector<Mat<K>>& s_candidates) {
    const auto& c = q.comagma;
    const auto& a = c.alg;
    const auto& f = a.field();
    const Eigen::Index n = a.dim();
    const std::vector<long> combo_coeffs{0, 1, -1, 2, -2};

    for (const Mat<K>& s : s_candidates) {
        if (!is_zero_vec<K>(Vec<K>(s * a.unit() - a.unit()))) continue;
        bool antimorphism = true;
        for (Eigen::Index i = 0; i < n && antimorphism; ++i)
            for (Eigen::Index j = 0; j < n && antimorphism; ++j)
                antimorphism = is_zero_vec<K>(Vec<K>(
                    s * a.mul(a.basis_vec(i), a.basis_vec(j)) - a.mul(Vec<K>(s.col(j)), Vec<K>(s.col(i)))));
        if (!antimorphism) continue;

        // QA1 as a linear system in a: stack (M_i - eps(e_i) I) a = 0
        Mat<K> qa1 = Mat<K>::Constant(n * n, n, f.zero());
        for (Eigen::Index i = 0; i < n; ++i) {
            Mat<K> mi = Mat<K>::Constant(n, n, f.zero());
            TensorElement<K> d = c.delta_of(a.basis_vec(i));
            for (Eigen::Index p = 0; p < n; ++p)
                for (Eigen::Index r = 0; r < n; ++r) {
                    const K& dc = d.coeffs(p * n + r);
                    if (dc.is_zero()) continue;
                    mi += a.left_rep(Vec<K>(s.col(p))) * a.right_basis(r) * dc;
                }
            mi -= identity(f, n) * q.eps.of(a.basis_vec(i));
            qa1.middleRows(i * n, n) = mi;
        }
        RowReduction<K> red = row_reduce(f, qa1);
        std::vector<Vec<K>> a_basis;
        {
            std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
            for (Eigen::Index pc : red.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
            for (Eigen::Index fr = 0; fr < n; ++fr) {
                if (is_pivot[static_cast<std::size_t>(fr)]) continue;
                Vec<K> x = Vec<K>::Constant(n, f.zero());
                x(fr) = f.one();
                for (Eigen::Index r = 0; r < red.rank(); ++r)
                    x(red.pivot_cols[static_cast<std::size_t>(r)]) = -red.rref(r, fr);
                a_basis.push_back(std::move(x));
            }
        }
        if (a_basis.empty()) continue;

        // remaining axioms are linear in b once a is fixed
        std::vector<std::size_t> digits(a_basis.size(), 0);
        for (;;) {
            Vec<K> a_cand = Vec<K>::Constant(n, f.zero());
            for (std::size_t i = 0; i < a_basis.size(); ++i)
                a_cand += a_basis[i] * f.from_long(combo_coeffs[digits[i]]);
            if (!is_zero_vec<K>(a_cand)) {
                Mat<K> sys = Mat<K>::Constant(n * n + 2 * n, n, f.zero());
                Vec<K> rhs = Vec<K>::Constant(n * n + 2 * n, f.zero());
                for (Eigen::Index i = 0; i < n; ++i) { // QA2
                    Mat<K> ni = Mat<K>::Constant(n, n, f.zero());
                    TensorElement<K> d = c.delta_of(a.basis_vec(i));
                    for (Eigen::Index p = 0; p < n; ++p)
                        for (Eigen::Index r = 0; r < n; ++r) {
                            const K& dc = d.coeffs(p * n + r);
                            if (dc.is_zero()) continue;
                            ni += a.left_basis(p) * a.right_rep(Vec<K>(s.col(r))) * dc;
                        }
                    ni -= identity(f, n) * q.eps.of(a.basis_vec(i));
                    sys.middleRows(i * n, n) = ni;
                }
                Mat<K> qa3 = Mat<K>::Constant(n, n, f.zero());
                Mat<K> qa4 = Mat<K>::Constant(n, n, f.zero());
                for (Eigen::Index p = 0; p < n; ++p)
                    for (Eigen::Index r = 0; r < n; ++r)
                        for (Eigen::Index t = 0; t < n; ++t) {
                            const K& c3 = q.phi.coeffs((p * n + r) * n + t);
                            if (!c3.is_zero())
                                qa3 += a.left_basis(p) *
                                       a.right_rep(a.mul(a.mul(Vec<K>(s.col(r)), a_cand), a.basis_vec(t))) * c3;
                            const K& c4 = q.phi_inv.coeffs((p * n + r) * n + t);
                            if (!c4.is_zero())
                                qa4 += a.left_rep(a.mul(a.mul(Vec<K>(s.col(p)), a_cand), a.basis_vec(r))) *
                                       a.right_rep(Vec<K>(s.col(t))) * c4;
                        }
                sys.middleRows(n * n, n) = qa3;
                sys.middleRows(n * n + n, n) = qa4;
                rhs.segment(n * n, n) = a.unit();
                rhs.segment(n * n + n, n) = a.unit();
                if (auto b_cand = solve_affine(f, sys, rhs)) {
                    QuasiAntipode<K> qa{s, a_cand, *b_cand};
                    if (check_quasi_antipode(q, qa).ok()) return qa;
                }
            }
            std::size_t pos = a_basis.size();
            while (pos > 0) {
                if (++digits[pos - 1] < combo_coeffs.size()) break;
                digits[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return std::nullopt;
}

// S-candidate grid for 2-dimensional algebras: S(1) = 1, S(e_1) = alpha e_1 + beta
template <class K>
std::vector<Mat<K>> s_candidates_dim2(const FinDimAlgebra<K>& a) {
    std::vector<Mat<K>> out;
    const auto& f = a.field();
    for (long alpha = -2; alpha <= 2; ++alpha)
        for (long beta = -2; beta <= 2; ++beta) {
            Mat<K> s = Mat<K>::Constant(2, 2, f.zero());
            s(0, 0) = f.one();
            s(1, 1) = f.from_long(alpha);
            s(0, 1) = f.from_long(beta);
            out.push_back(std::move(s));
        }
    return out;
}

template <class K>
Mat<K> inversion_antipode(const FinDimAlgebra<K>& a, const std::vector<int>& inverses) {
    Mat<K> s = Mat<K>::Constant(a.dim(), a.dim(), a.field().zero());
    for (Eigen::Index i = 0; i < a.dim(); ++i) s(inverses[static_cast<std::size_t>(i)], i) = a.field().one();
    return s;
}

// --- random elements -----------------------------------------------------------

template <class K>
TensorElement<K> random_env_unit(const FinDimAlgebra<K>& a, std::mt19937_64& rng) {
    for (;;) {
        TensorElement<K> g = TensorElement<K>::zero(a.field(), 2, a.dim());
        for (Eigen::Index i = 0; i < g.coeffs.size(); ++i) g.coeffs(i) = a.field().random(rng);
        if (env_invert(a, g)) return g;
    }
}

// invertible gamma with (eps (x) A) gamma = 1
template <class K>
TensorElement<K> random_g0_element(const ComagmaAlgebra<K>& c, const CounitData<K>& eps, std::mt19937_64& rng) {
    const auto& a = c.alg;
    for (;;) {
        TensorElement<K> g = random_env_unit(a, rng);
        Vec<K> g0 = tensor_contract(a.field(), g, {{0, eps.eps}}).coeffs;
        auto g0_inv = a.invert_element(g0);
        if (!g0_inv) continue;
        // normalize: gamma . (1 (x) g0^{-1}) has first-leg counit contraction 1
        TensorElement<K> fix = pair_tensor(a, a.unit(), *g0_inv);
        TensorElement<K> out = env_product(a, g, fix);
        if (env_invert(a, out)) return out;
    }
}

// --- modules --------------------------------------------------------------------

template <class K>
AModule<K> kz2_sign_module(const FinDimAlgebra<K>& a) {
    AModule<K> v;
    v.dim = 1;
    Mat<K> one(1, 1), minus(1, 1);
    one(0, 0) = a.field().one();
    minus(0, 0) = a.field().from_long(-1);
    v.action = {one, minus};
    return v;
}

template <class K>
AModule<K> h4_two_dim_module(const FinDimAlgebra<K>& a) {
    const auto& f = a.field();
    AModule<K> v;
    v.dim = 2;
    Mat<K> id = identity(f, 2);
    Mat<K> g = Mat<K>::Constant(2, 2, f.zero());
    g(0, 0) = f.one();
    g(1, 1) = f.from_long(-1);
    Mat<K> x = Mat<K>::Constant(2, 2, f.zero());
    x(0, 1) = f.one();
    v.action = {id, g, x, Mat<K>(g * x)};
    return v;
}

// --- finite categories and monoids ---------------------------------------------

inline FinMonoid cyclic_monoid(int m) {
    FinMonoid mo;
    for (int i = 0; i < m; ++i) mo.names.push_back("a" + std::to_string(i));
    mo.unit = 0;
    mo.op = cyclic_table(m);
    return mo;
}

inline FinMonoid klein_monoid() {
    FinMonoid mo;
    mo.names = {"e", "a", "b", "ab"};
    mo.unit = 0;
    mo.op = klein_table();
    return mo;
}

inline FinMonoid bool_monoid() {
    FinMonoid mo;
    mo.names = {"1", "0"};
    mo.unit = 0;
    mo.op = {{0, 1}, {1, 1}};
    return mo;
}

// {0, 1, 2} with x + y capped at 2
inline FinMonoid min_truncation_monoid() {
    FinMonoid mo;
    mo.names = {"t0", "t1", "t2"};
    mo.unit = 0;
    mo.op.assign(3, std::vector<int>(3));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) mo.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::min(x + y, 2);
    return mo;
}

// one-object category from a monoid
inline FinCategory one_object_category(const FinMonoid& m) {
    FinCategory c;
    c.n_objects = 1;
    for (const auto& n : m.names) c.morphisms.push_back({n, 0, 0});
    c.identities = {m.unit};
    c.compose = m.op;
    return c;
}

// two objects, a single non-identity arrow 0 -> 1
inline FinCategory interval_category() {
    FinCategory c;
    c.n_objects = 2;
    c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"f", 0, 1}};
    c.identities = {0, 1};
    c.compose.assign(3, std::vector<int>(3, -1));
    c.compose[0][0] = 0;
    c.compose[1][1] = 1;
    c.compose[2][0] = 2; // f o id0 = f
    c.compose[1][2] = 2; // id1 o f = f
    return c;
}

inline FinCategory discrete_category(int n) {
    FinCategory c;
    c.n_objects = n;
    for (int s = 0; s < n; ++s) {
        c.morphisms.push_back({"id" + std::to_string(s), s, s});
        c.identities.push_back(s);
    }
    c.compose.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) c.compose[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = s;
    return c;
}

// connected groupoid on two objects: exactly one morphism between any two
inline FinCategory pair_groupoid2() {
    FinCategory c;
    c.n_objects = 2;
    c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
    c.identities = {0, 1};
    c.compose.assign(4, std::vector<int>(4, -1));
    auto set = [&](int f, int g, int h) { c.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] = h; };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 0, 2); // u id0 = u
    set(1, 2, 2); // id1 u = u
    set(3, 1, 3);
    set(0, 3, 3);
    set(3, 2, 0); // v u = id0
    set(2, 3, 1); // u v = id1
    return c;
}

// three objects, two non-identity arrows out of the middle object
inline FinCategory span_category() {
    FinCategory c;
    c.n_objects = 3;
    c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"id2", 2, 2}, {"l", 1, 0}, {"r", 1, 2}};
    c.identities = {0, 1, 2};
    c.compose.assign(5, std::vector<int>(5, -1));
    auto set = [&](int f, int g, int h) { c.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] = h; };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 2, 2);
    set(3, 1, 3);
    set(0, 3, 3);
    set(4, 1, 4);
    set(2, 4, 4);
    return c;
}

} // namespace fixtures
