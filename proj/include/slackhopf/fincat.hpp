// Finite categories and monoids, and the combinatorial criterion mirroring
// slack Hopf structures there: a family (a, b) of endomorphisms such that
// every pair (h: t -> s, k: u -> s) factors UNIQUELY as h = f a_t,
// k = f b_t g with f: t -> s, g: u -> t. A category admits such a family
// exactly when it is a groupoid; a monoid, exactly when it is a group.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slackhopf/errors.hpp"

namespace slackhopf {

struct FinCategory {
    struct Morphism {
        std::string name;
        int dom = 0;
        int cod = 0;
    };

    int n_objects = 0;
    std::vector<Morphism> morphisms;
    std::vector<int> identities;           // identity morphism per object
    std::vector<std::vector<int>> compose; // compose[f][g] = f o g when cod(g) = dom(f), else -1

    int mor_count() const { return static_cast<int>(morphisms.size()); }

    bool composable(int f, int g) const { return morphisms[g].cod == morphisms[f].dom; }

    std::vector<int> hom(int dom, int cod) const {
        std::vector<int> out;
        for (int f = 0; f < mor_count(); ++f)
            if (morphisms[f].dom == dom && morphisms[f].cod == cod) out.push_back(f);
        return out;
    }
};

inline ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;
    const int m = c.mor_count();
    rep.require(static_cast<int>(c.identities.size()) == c.n_objects, "one identity per object required");
    rep.require(static_cast<int>(c.compose.size()) == m, "composition table has wrong shape");
    if (!rep.ok()) return rep;

    for (int f = 0; f < m; ++f) {
        rep.require(static_cast<int>(c.compose[f].size()) == m, "composition table row has wrong length");
        if (!rep.ok()) return rep;
        for (int g = 0; g < m; ++g) {
            const int h = c.compose[f][g];
            if (c.composable(f, g)) {
                rep.require(h >= 0 && h < m, "missing composite " + c.morphisms[f].name + " o " + c.morphisms[g].name);
                if (h >= 0 && h < m)
                    rep.require(c.morphisms[h].dom == c.morphisms[g].dom && c.morphisms[h].cod == c.morphisms[f].cod,
                                "composite " + c.morphisms[f].name + " o " + c.morphisms[g].name +
                                    " has wrong endpoints");
            } else {
                rep.require(h == -1, "composite defined for non-composable pair " + c.morphisms[f].name + " o " +
                                         c.morphisms[g].name);
            }
        }
    }
    if (!rep.ok()) return rep;

    for (int s = 0; s < c.n_objects; ++s) {
        const int id = c.identities[s];
        rep.require(c.morphisms[id].dom == s && c.morphisms[id].cod == s, "identity of object " + std::to_string(s) +
                                                                              " is not an endomorphism");
    }
    for (int f = 0; f < m; ++f) {
        rep.require(c.compose[f][c.identities[c.morphisms[f].dom]] == f,
                    "right identity law fails at " + c.morphisms[f].name);
        rep.require(c.compose[c.identities[c.morphisms[f].cod]][f] == f,
                    "left identity law fails at " + c.morphisms[f].name);
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (!c.composable(f, g)) continue;
            for (int h = 0; h < m; ++h) {
                if (!c.composable(g, h)) continue;
                rep.require(c.compose[c.compose[f][g]][h] == c.compose[f][c.compose[g][h]],
                            "associativity fails at (" + c.morphisms[f].name + ", " + c.morphisms[g].name + ", " +
                                c.morphisms[h].name + ")");
            }
        }
    return rep;
}

inline bool is_groupoid(const FinCategory& c) {
    for (int f = 0; f < c.mor_count(); ++f) {
        const int s = c.morphisms[f].cod, t = c.morphisms[f].dom;
        bool has_inverse = false;
        for (int g : c.hom(s, t))
            if (c.compose[f][g] == c.identities[s] && c.compose[g][f] == c.identities[t]) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) return false;
    }
    return true;
}

// Tests one endomorphism family (a, b): for every (h: t -> s, k: u -> s)
// exactly one pair (f: t -> s, g: u -> t) satisfies f a_t = h and f b_t g = k.
inline bool category_slack_hopf(const FinCategory& c, const std::vector<int>& a, const std::vector<int>& b) {
    for (int s = 0; s < c.n_objects; ++s)
        if (c.morphisms[a[s]].dom != s || c.morphisms[a[s]].cod != s || c.morphisms[b[s]].dom != s ||
            c.morphisms[b[s]].cod != s)
            throw DimensionMismatch("slack family must consist of endomorphisms");

    for (int h = 0; h < c.mor_count(); ++h) {
        const int t = c.morphisms[h].dom, s = c.morphisms[h].cod;
        for (int k = 0; k < c.mor_count(); ++k) {
            if (c.morphisms[k].cod != s) continue;
            const int u = c.morphisms[k].dom;
            int solutions = 0;
            for (int f : c.hom(t, s)) {
                if (c.compose[f][a[t]] != h) continue;
                const int fb = c.compose[f][b[t]];
                for (int g : c.hom(u, t))
                    if (c.compose[fb][g] == k) ++solutions;
                if (solutions > 1) break;
            }
            if (solutions != 1) return false;
        }
    }
    return true;
}

struct CategoryWitness {
    std::vector<int> a, b;
};

// Exhaustive sweep over all endomorphism families, in lexicographic order of
// the concatenated (a, b) assignment; the first hit is the reported witness.
inline std::optional<CategoryWitness> exists_category_slack_hopf(const FinCategory& c,
                                                                 std::uint64_t budget = std::uint64_t(1) << 20) {
    std::vector<std::vector<int>> endos(static_cast<std::size_t>(c.n_objects));
    std::uint64_t total = 1;
    for (int s = 0; s < c.n_objects; ++s) {
        endos[static_cast<std::size_t>(s)] = c.hom(s, s);
        const std::uint64_t e = endos[static_cast<std::size_t>(s)].size();
        if (e == 0) return std::nullopt; // identities exist, so this cannot happen on valid input
        if (total > budget / (e * e)) throw BoundExceeded("endomorphism family space exceeds budget");
        total *= e * e;
        if (total > budget) throw BoundExceeded("endomorphism family space exceeds budget");
    }

    const int m = c.n_objects;
    std::vector<std::size_t> digits(static_cast<std::size_t>(2 * m), 0);
    for (;;) {
        std::vector<int> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
        for (int s = 0; s < m; ++s) {
            a[static_cast<std::size_t>(s)] = endos[static_cast<std::size_t>(s)][digits[static_cast<std::size_t>(s)]];
            b[static_cast<std::size_t>(s)] =
                endos[static_cast<std::size_t>(s)][digits[static_cast<std::size_t>(m + s)]];
        }
        if (category_slack_hopf(c, a, b)) return CategoryWitness{std::move(a), std::move(b)};
        int pos = 2 * m - 1;
        while (pos >= 0) {
            const std::size_t limit = endos[static_cast<std::size_t>(pos % m)].size();
            if (++digits[static_cast<std::size_t>(pos)] < limit) break;
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

struct FinMonoid {
    std::vector<std::string> names;
    int unit = 0;
    std::vector<std::vector<int>> op; // op[x][y] = x * y

    int order() const { return static_cast<int>(names.size()); }
};

inline ValidationReport validate_monoid(const FinMonoid& m) {
    ValidationReport rep;
    const int n = m.order();
    rep.require(static_cast<int>(m.op.size()) == n, "operation table has wrong shape");
    if (!rep.ok()) return rep;
    for (int x = 0; x < n; ++x) {
        rep.require(static_cast<int>(m.op[x].size()) == n, "operation table row has wrong length");
        if (!rep.ok()) return rep;
    }
    for (int x = 0; x < n; ++x) {
        rep.require(m.op[m.unit][x] == x, "left unit law fails at " + m.names[static_cast<std::size_t>(x)]);
        rep.require(m.op[x][m.unit] == x, "right unit law fails at " + m.names[static_cast<std::size_t>(x)]);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                rep.require(m.op[m.op[x][y]][z] == m.op[x][m.op[y][z]],
                            "associativity fails at (" + m.names[static_cast<std::size_t>(x)] + ", " +
                                m.names[static_cast<std::size_t>(y)] + ", " + m.names[static_cast<std::size_t>(z)] +
                                ")");
    return rep;
}

inline bool is_group(const FinMonoid& m) {
    for (int x = 0; x < m.order(); ++x) {
        bool invertible = false;
        for (int y = 0; y < m.order(); ++y)
            if (m.op[x][y] == m.unit && m.op[y][x] == m.unit) {
                invertible = true;
                break;
            }
        if (!invertible) return false;
    }
    return true;
}

// (x, y) |-> (x a, x b y) on M x M; a witness is a pair making this bijective.
inline bool monoid_slack_hopf_pair(const FinMonoid& m, int a, int b) {
    const int n = m.order();
    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int img = m.op[x][a] * n + m.op[m.op[x][b]][y];
            if (seen[static_cast<std::size_t>(img)]) return false;
            seen[static_cast<std::size_t>(img)] = true;
        }
    return true;
}

struct MonoidWitness {
    int a = 0, b = 0;
};

inline std::optional<MonoidWitness> monoid_slack_hopf(const FinMonoid& m) {
    for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b)
            if (monoid_slack_hopf_pair(m, a, b)) return MonoidWitness{a, b};
    return std::nullopt;
}

} // namespace slackhopf
