// The slack Hopf engine. For a comagma algebra (A, Delta) and v in A (x) A,
// the twisted fusion operator is
//
//     H^v : A (x) A -> A (x) A,  x (x) y |-> x_(1) v^(1) (x) x_(2) v^(2) y,
//
// and v is a slack left Hopf structure when H^v is bijective. A certificate
// carries the exact inverse together with the derived data
//     w = (H^v)^{-1}(1 (x) 1),   nabla(x) = (H^v)^{-1}(v^(1) x (x) v^(2)),
// where nabla is an algebra antimorphism A -> A^e.
#pragma once

#include <cstdint>
#include <variant>

#include "slackhopf/algebra.hpp"

namespace slackhopf {

inline constexpr std::size_t default_exhaustive_bound = std::size_t(1) << 20;

template <class K>
TensorElement<K> pair_tensor(const FinDimAlgebra<K>& a, const Vec<K>& x, const Vec<K>& y) {
    return tensor_from_vec<K>(a.dim(), 2, kron_vec<K>(x, y));
}

template <class K>
TensorElement<K> basis_pair(const FinDimAlgebra<K>& a, Eigen::Index i, Eigen::Index j) {
    return pair_tensor(a, a.basis_vec(i), a.basis_vec(j));
}

// Matrix of H^v in the global flat basis. Column (i*n + j) is
// Delta(e_i) * v * (1 (x) e_j), products taken componentwise in A (x) A.
template <class K>
Mat<K> fusion_matrix(const ComagmaAlgebra<K>& c, const TensorElement<K>& v) {
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();
    if (v.rank != 2 || v.dim != n) throw DimensionMismatch("slack structure candidate must live in A (x) A");
    Mat<K> h(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const TensorElement<K> ti = tensor_pointwise_product(a, c.delta_of(a.basis_vec(i)), v);
        for (Eigen::Index j = 0; j < n; ++j) {
            const TensorElement<K> col = tensor_contract(a.field(), ti, {{1, a.right_basis(j)}});
            h.col(i * n + j) = col.coeffs;
        }
    }
    return h;
}

// H^l = H^{1 (x) 1}; its bijectivity characterises Hopf-ness for bialgebras.
template <class K>
Mat<K> fusion_operator(const ComagmaAlgebra<K>& c) {
    return fusion_matrix(c, unit_tensor(c.alg, 2));
}

template <class K>
struct SlackHopfCertificate {
    TensorElement<K> v;
    Mat<K> Hv;
    Mat<K> Hv_inv;
    TensorElement<K> w;     // (H^v)^{-1}(1 (x) 1)
    Mat<K> nabla;           // n^2 x n, column i = nabla(e_i)

    TensorElement<K> nabla_of(const FinDimAlgebra<K>& a, const Vec<K>& x) const {
        return tensor_from_vec<K>(a.dim(), 2, Vec<K>(nabla * x));
    }
};

template <class K>
struct SlackCheckResult {
    std::optional<SlackHopfCertificate<K>> cert;
    std::vector<TensorElement<K>> kernel; // witnesses when H^v is singular

    bool slack() const { return cert.has_value(); }
};

template <class K>
SlackCheckResult<K> check_slack_structure(const ComagmaAlgebra<K>& c, const TensorElement<K>& v) {
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();

    Mat<K> hv = fusion_matrix(c, v);
    InvertResult<K> inv = solve_or_invert(field, hv);
    if (!inv.invertible()) {
        SlackCheckResult<K> res;
        for (auto& k : inv.kernel) res.kernel.push_back(tensor_from_vec<K>(n, 2, std::move(k)));
        return res;
    }

    SlackHopfCertificate<K> cert;
    cert.v = v;
    cert.Hv = std::move(hv);
    cert.Hv_inv = std::move(*inv.inverse);
    cert.w = tensor_from_vec<K>(n, 2, Vec<K>(cert.Hv_inv * unit_tensor(a, 2).coeffs));
    cert.nabla = Mat<K>(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        // v * (e_i (x) 1) = v^(1) e_i (x) v^(2) in the componentwise algebra
        TensorElement<K> arg = tensor_pointwise_product(a, v, pair_tensor(a, a.basis_vec(i), a.unit()));
        cert.nabla.col(i) = Vec<K>(cert.Hv_inv * arg.coeffs);
    }

    // certificate invariants; failures mean the input comagma was invalid
    if (!is_zero_mat<K>(Mat<K>(cert.Hv * cert.Hv_inv - identity(field, n * n))) ||
        !is_zero_mat<K>(Mat<K>(cert.Hv_inv * cert.Hv - identity(field, n * n))))
        throw IdentityViolation("H^v inverse is not two-sided");
    if (cert.nabla_of(a, a.unit()) != unit_tensor(a, 2))
        throw IdentityViolation("nabla(1) != 1 (x) 1");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            TensorElement<K> lhs = cert.nabla_of(a, Vec<K>(a.mult_matrix().col(i * n + j)));
            TensorElement<K> rhs = env_product(a, cert.nabla_of(a, a.basis_vec(j)), cert.nabla_of(a, a.basis_vec(i)));
            if (lhs != rhs) throw IdentityViolation("nabla is not an algebra antimorphism");
        }

    SlackCheckResult<K> res;
    res.cert = std::move(cert);
    return res;
}

// Right torsor action of A^e on slack structures: v <| g = H^v(g).
template <class K>
TensorElement<K> torsor_act(const SlackHopfCertificate<K>& cert, const TensorElement<K>& g) {
    return tensor_from_vec<K>(g.dim, 2, Vec<K>(cert.Hv * g.coeffs));
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct ExhaustiveSearch {
    std::size_t max_candidates = default_exhaustive_bound;
};

struct RandomizedSearch {
    std::uint64_t seed = 12345;
    long max_trials = 64;
};

using SearchStrategy = std::variant<ExhaustiveSearch, RandomizedSearch>;

enum class SearchVerdict { Found, NoneExists, Unknown };

template <class K>
struct SearchResult {
    SearchVerdict verdict = SearchVerdict::Unknown;
    std::optional<SlackHopfCertificate<K>> cert;
    long trials = 0;
};

namespace detail {

// Number of tensors to sweep, or nullopt on overflow past `bound`.
inline std::optional<std::size_t> candidate_count(std::size_t field_order, Eigen::Index coeffs, std::size_t bound) {
    std::size_t total = 1;
    for (Eigen::Index i = 0; i < coeffs; ++i) {
        if (total > bound / field_order + 1) return std::nullopt;
        total *= field_order;
        if (total > bound) return std::nullopt;
    }
    return total;
}

} // namespace detail

// Enumerates all tensors of the given rank in lexicographic coefficient
// order (flat index 0 most significant) and calls fn on each; fn returns
// true to stop early.
template <class K, class Fn>
void for_each_tensor(const Field<K>& field, int rank, Eigen::Index dim, Fn&& fn) {
    static_assert(Field<K>::finite, "enumeration requires a finite field");
    const Eigen::Index len = pow_index(dim, rank);
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    const std::size_t order = field.order();
    TensorElement<K> t = TensorElement<K>::zero(field, rank, dim);
    for (;;) {
        for (Eigen::Index i = 0; i < len; ++i) t.coeffs(i) = field.nth(digits[static_cast<std::size_t>(i)]);
        if (fn(t)) return;
        Eigen::Index pos = len - 1;
        while (pos >= 0) {
            if (++digits[static_cast<std::size_t>(pos)] < order) break;
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

template <class K>
SearchResult<K> find_slack_structure(const ComagmaAlgebra<K>& c, const SearchStrategy& strategy) {
    const auto& a = c.alg;
    const auto& field = a.field();
    const Eigen::Index n = a.dim();

    if (const auto* ex = std::get_if<ExhaustiveSearch>(&strategy)) {
        if constexpr (!Field<K>::finite) {
            throw BoundExceeded("exhaustive search needs a finite field");
        } else {
            auto count = detail::candidate_count(field.order(), n * n, ex->max_candidates);
            if (!count)
                throw BoundExceeded("candidate space exceeds " + std::to_string(ex->max_candidates));
            SearchResult<K> res;
            res.verdict = SearchVerdict::NoneExists;
            for_each_tensor(field, 2, n, [&](const TensorElement<K>& v) {
                ++res.trials;
                SlackCheckResult<K> chk = check_slack_structure(c, v);
                if (chk.slack()) {
                    res.verdict = SearchVerdict::Found;
                    res.cert = std::move(chk.cert);
                    return true;
                }
                return false;
            });
            return res;
        }
    }

    const auto& rnd = std::get<RandomizedSearch>(strategy);
    std::mt19937_64 rng(rnd.seed);
    SearchResult<K> res;
    for (long trial = 0; trial < rnd.max_trials; ++trial) {
        TensorElement<K> v = TensorElement<K>::zero(field, 2, n);
        for (Eigen::Index i = 0; i < v.coeffs.size(); ++i) v.coeffs(i) = field.random(rng);
        ++res.trials;
        SlackCheckResult<K> chk = check_slack_structure(c, v);
        if (chk.slack()) {
            res.verdict = SearchVerdict::Found;
            res.cert = std::move(chk.cert);
            return res;
        }
    }
    // a randomized miss is inconclusive; only a complete sweep may say NoneExists
    res.verdict = SearchVerdict::Unknown;
    return res;
}

// Complete enumeration of all slack left Hopf structures (finite fields only).
template <class K>
std::vector<TensorElement<K>> enumerate_slack_structures(const ComagmaAlgebra<K>& c,
                                                         std::size_t bound = default_exhaustive_bound) {
    static_assert(Field<K>::finite, "enumeration requires a finite field");
    const auto& field = c.alg.field();
    const Eigen::Index n = c.alg.dim();
    if (!detail::candidate_count(field.order(), n * n, bound))
        throw BoundExceeded("candidate space exceeds " + std::to_string(bound));
    std::vector<TensorElement<K>> out;
    for_each_tensor(field, 2, n, [&](const TensorElement<K>& v) {
        if (check_slack_structure(c, v).slack()) out.push_back(v);
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks on certificates
// ---------------------------------------------------------------------------

// Adjoint equations relating (Delta, v) and (nabla, w), all in A^e products:
//   (1) (x (x) 1) . v = H^v nabla(x)
//   (2) w . (x (x) 1) = (H^v)^{-1} Delta(x)
//   (3) H^v w = 1 (x) 1
//   (4) (H^v)^{-1} v = 1 (x) 1
// plus the closed form (H^v)^{-1}(x (x) y) = nabla(x) . w . (1 (x) y).
template <class K>
ValidationReport check_adjoint_identities(const SlackHopfCertificate<K>& cert, const ComagmaAlgebra<K>& c) {
    ValidationReport rep;
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();

    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec<K> e = a.basis_vec(i);
        TensorElement<K> lhs1 = env_product(a, pair_tensor(a, e, a.unit()), cert.v);
        TensorElement<K> rhs1 = tensor_from_vec<K>(n, 2, Vec<K>(cert.Hv * cert.nabla.col(i)));
        rep.require(lhs1 == rhs1, "adjoint equation (1) fails at basis index " + std::to_string(i));

        TensorElement<K> lhs2 = env_product(a, cert.w, pair_tensor(a, e, a.unit()));
        TensorElement<K> rhs2 = tensor_from_vec<K>(n, 2, Vec<K>(cert.Hv_inv * c.delta.col(i)));
        rep.require(lhs2 == rhs2, "adjoint equation (2) fails at basis index " + std::to_string(i));
    }

    rep.require(tensor_from_vec<K>(n, 2, Vec<K>(cert.Hv * cert.w.coeffs)) == unit_tensor(a, 2),
                "adjoint equation (3) fails: H^v w != 1 (x) 1");
    rep.require(tensor_from_vec<K>(n, 2, Vec<K>(cert.Hv_inv * cert.v.coeffs)) == unit_tensor(a, 2),
                "adjoint equation (4) fails: (H^v)^{-1} v != 1 (x) 1");

    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            TensorElement<K> lhs = tensor_from_vec<K>(n, 2, Vec<K>(cert.Hv_inv * basis_pair(a, i, j).coeffs));
            TensorElement<K> rhs = env_product(
                a, env_product(a, cert.nabla_of(a, a.basis_vec(i)), cert.w), pair_tensor(a, a.unit(), a.basis_vec(j)));
            rep.require(lhs == rhs, "closed form for (H^v)^{-1} fails at basis pair (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ")");
        }
    return rep;
}

// Q^s(x (x) y) = nabla(x) . s . (1 (x) y), the v/w-swapped analogue of H^v.
template <class K>
Mat<K> q_matrix(const SlackHopfCertificate<K>& cert, const ComagmaAlgebra<K>& c, const TensorElement<K>& s) {
    const auto& a = c.alg;
    const Eigen::Index n = a.dim();
    Mat<K> q(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        TensorElement<K> ns = env_product(a, cert.nabla_of(a, a.basis_vec(i)), s);
        for (Eigen::Index j = 0; j < n; ++j)
            q.col(i * n + j) = env_product(a, ns, pair_tensor(a, a.unit(), a.basis_vec(j))).coeffs;
    }
    return q;
}

// Uniqueness of v and w as solutions of the adjoint equations, confirmed by
// complete enumeration:
//   (1) v is the only t with H^t nabla(x) = (x (x) 1) . t and H^t(w) = 1 (x) 1;
//   (2) w is the only s with Q^s Delta(x) = s . (x (x) 1) and Q^s(v) = 1 (x) 1.
template <class K>
ValidationReport check_vw_uniqueness(const SlackHopfCertificate<K>& cert, const ComagmaAlgebra<K>& c,
                                     std::size_t bound = default_exhaustive_bound) {
    if constexpr (!Field<K>::finite) {
        throw BoundExceeded("uniqueness sweep needs a finite field");
    } else {
        const auto& a = c.alg;
        const auto& field = a.field();
        const Eigen::Index n = a.dim();
        if (!detail::candidate_count(field.order(), n * n, bound))
            throw BoundExceeded("candidate space exceeds " + std::to_string(bound));

        ValidationReport rep;

        std::vector<TensorElement<K>> t_solutions;
        for_each_tensor(field, 2, n, [&](const TensorElement<K>& t) {
            Mat<K> ht = fusion_matrix(c, t);
            if (tensor_from_vec<K>(n, 2, Vec<K>(ht * cert.w.coeffs)) != unit_tensor(a, 2)) return false;
            for (Eigen::Index i = 0; i < n; ++i) {
                TensorElement<K> lhs = tensor_from_vec<K>(n, 2, Vec<K>(ht * cert.nabla.col(i)));
                TensorElement<K> rhs = env_product(a, pair_tensor(a, a.basis_vec(i), a.unit()), t);
                if (lhs != rhs) return false;
            }
            t_solutions.push_back(t);
            return false;
        });
        rep.require(t_solutions.size() == 1 && t_solutions.front() == cert.v,
                    "v is not the unique solution of its adjoint equations (found " +
                        std::to_string(t_solutions.size()) + ")");

        std::vector<TensorElement<K>> s_solutions;
        for_each_tensor(field, 2, n, [&](const TensorElement<K>& s) {
            Mat<K> qs = q_matrix(cert, c, s);
            if (tensor_from_vec<K>(n, 2, Vec<K>(qs * cert.v.coeffs)) != unit_tensor(a, 2)) return false;
            for (Eigen::Index i = 0; i < n; ++i) {
                TensorElement<K> lhs = tensor_from_vec<K>(n, 2, Vec<K>(qs * c.delta.col(i)));
                TensorElement<K> rhs = env_product(a, s, pair_tensor(a, a.basis_vec(i), a.unit()));
                if (lhs != rhs) return false;
            }
            s_solutions.push_back(s);
            return false;
        });
        rep.require(s_solutions.size() == 1 && s_solutions.front() == cert.w,
                    "w is not the unique solution of its adjoint equations (found " +
                        std::to_string(s_solutions.size()) + ")");
        return rep;
    }
}

} // namespace slackhopf
