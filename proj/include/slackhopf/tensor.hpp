// Dense elements of A^{(x)k}: rank-k coefficient arrays over the base field.
//
// The flat index of (i_1, ..., i_k), all in [0, n), is sum_j i_j * n^{k-j}
// (row-major). This convention is global: every operator matrix in the
// library uses it, e.g. e_i (x) e_j lives at slot i*n + j of a rank-2 array.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "slackhopf/linalg.hpp"

namespace slackhopf {

inline Eigen::Index pow_index(Eigen::Index base, int exp) {
    Eigen::Index r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

template <class K>
struct TensorElement {
    int rank = 1;
    Eigen::Index dim = 0;
    Vec<K> coeffs; // length dim^rank

    TensorElement() = default;
    TensorElement(int rank_, Eigen::Index dim_, Vec<K> coeffs_)
        : rank(rank_), dim(dim_), coeffs(std::move(coeffs_)) {
        if (coeffs.size() != pow_index(dim, rank))
            throw DimensionMismatch("tensor coefficient array has wrong length");
    }

    static TensorElement zero(const Field<K>& field, int rank, Eigen::Index dim) {
        return TensorElement(rank, dim, Vec<K>::Constant(pow_index(dim, rank), field.zero()));
    }

    Eigen::Index flat(std::span<const Eigen::Index> idx) const {
        Eigen::Index f = 0;
        for (Eigen::Index i : idx) f = f * dim + i;
        return f;
    }

    const K& at(std::initializer_list<Eigen::Index> idx) const {
        return coeffs(flat(std::span<const Eigen::Index>(idx.begin(), idx.size())));
    }
    K& at(std::initializer_list<Eigen::Index> idx) {
        return coeffs(flat(std::span<const Eigen::Index>(idx.begin(), idx.size())));
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        if (a.rank != b.rank || a.dim != b.dim) return false;
        for (Eigen::Index i = 0; i < a.coeffs.size(); ++i)
            if (a.coeffs(i) != b.coeffs(i)) return false;
        return true;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }
};

// t1 (x) t2 as a rank-(r1+r2) tensor; indices of t1 are the most significant.
template <class K>
TensorElement<K> tensor_outer(const TensorElement<K>& t1, const TensorElement<K>& t2) {
    if (t1.dim != t2.dim) throw DimensionMismatch("outer product of tensors over different dimensions");
    TensorElement<K> r;
    r.rank = t1.rank + t2.rank;
    r.dim = t1.dim;
    r.coeffs = kron_vec<K>(t1.coeffs, t2.coeffs);
    return r;
}

namespace detail {

// Applies an m x n matrix to one slot of a rank-k tensor over dimension n.
// m == n keeps the rank; m == 1 contracts the slot away.
template <class K>
TensorElement<K> apply_to_slot(const Field<K>& field, const TensorElement<K>& t, int slot, const Mat<K>& map) {
    const Eigen::Index n = t.dim;
    const Eigen::Index m = map.rows();
    const Eigen::Index suffix = pow_index(n, t.rank - 1 - slot);
    const Eigen::Index prefix = pow_index(n, slot);

    const bool contracts = (m == 1);
    TensorElement<K> out;
    out.rank = contracts ? t.rank - 1 : t.rank;
    out.dim = n;
    out.coeffs = Vec<K>::Constant(prefix * m * suffix, field.zero());

    for (Eigen::Index a = 0; a < prefix; ++a)
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index src_base = (a * n + i) * suffix;
            for (Eigen::Index j = 0; j < m; ++j) {
                const K& c = map(j, i);
                if (c.is_zero()) continue;
                const Eigen::Index dst_base = (a * m + j) * suffix;
                for (Eigen::Index b = 0; b < suffix; ++b) {
                    const K& src = t.coeffs(src_base + b);
                    if (src.is_zero()) continue;
                    out.coeffs(dst_base + b) += c * src;
                }
            }
        }
    return out;
}

} // namespace detail

// Slot-wise multilinear contraction: each listed map acts on its slot
// (0-based, leftmost is slot 0). Endomorphisms (n x n) keep the rank;
// covectors (1 x n) contract their slot away. Slots must be distinct.
template <class K>
TensorElement<K> tensor_contract(const Field<K>& field, const TensorElement<K>& t,
                                 const std::vector<std::pair<int, Mat<K>>>& slot_maps) {
    std::vector<bool> seen(static_cast<std::size_t>(t.rank), false);
    for (const auto& [slot, map] : slot_maps) {
        if (slot < 0 || slot >= t.rank) throw SlotOutOfRange(slot, t.rank);
        if (seen[static_cast<std::size_t>(slot)]) throw SlotOutOfRange(slot, t.rank);
        seen[static_cast<std::size_t>(slot)] = true;
        if (map.cols() != t.dim) throw DimensionMismatch("slot map has wrong number of columns");
        if (map.rows() != t.dim && map.rows() != 1)
            throw DimensionMismatch("slot map must be an endomorphism or a covector");
    }

    TensorElement<K> cur = t;
    // endomorphisms first (slot numbering is stable), then covectors from the
    // highest slot down so earlier removals do not shift later ones
    for (const auto& [slot, map] : slot_maps)
        if (map.rows() == t.dim) cur = detail::apply_to_slot(field, cur, slot, map);
    std::vector<std::pair<int, const Mat<K>*>> covectors;
    for (const auto& [slot, map] : slot_maps)
        if (map.rows() == 1) covectors.emplace_back(slot, &map);
    std::sort(covectors.begin(), covectors.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [slot, map] : covectors) cur = detail::apply_to_slot(field, cur, slot, *map);
    return cur;
}

} // namespace slackhopf
