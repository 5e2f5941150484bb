#include "doctest.h"

#include "fixtures.hpp"

using namespace slackhopf;

TEST_CASE("category validation") {
    CHECK(validate_category(fixtures::interval_category()).ok());
    CHECK(validate_category(fixtures::pair_groupoid2()).ok());
    CHECK(validate_category(fixtures::span_category()).ok());
    CHECK(validate_category(fixtures::one_object_category(fixtures::cyclic_monoid(3))).ok());

    FinCategory broken = fixtures::pair_groupoid2();
    broken.compose[3][2] = 1; // v o u must land in hom(0,0)
    CHECK_FALSE(validate_category(broken).ok());
}

TEST_CASE("groupoid detection") {
    CHECK(is_groupoid(fixtures::one_object_category(fixtures::cyclic_monoid(3))));
    CHECK_FALSE(is_groupoid(fixtures::interval_category()));
    // the action groupoid of Z/2 acting on two points by swapping is the
    // connected groupoid on two objects
    CHECK(is_groupoid(fixtures::pair_groupoid2()));
    CHECK_FALSE(is_groupoid(fixtures::one_object_category(fixtures::bool_monoid())));
    CHECK(is_groupoid(fixtures::discrete_category(2)));
    CHECK_FALSE(is_groupoid(fixtures::span_category()));
}

TEST_CASE("the (a, b) factorization criterion on explicit families") {
    SUBCASE("any groupoid with identity families") {
        FinCategory g = fixtures::pair_groupoid2();
        CHECK(category_slack_hopf(g, g.identities, g.identities));
        FinCategory z2 = fixtures::one_object_category(fixtures::cyclic_monoid(2));
        CHECK(category_slack_hopf(z2, z2.identities, z2.identities));
    }
    SUBCASE("the interval category admits no family at all") {
        FinCategory c = fixtures::interval_category();
        CHECK_FALSE(category_slack_hopf(c, c.identities, c.identities)); // the only candidate family
    }
    SUBCASE("Z/3 with a = b = generator is a torsor-shifted witness") {
        FinCategory c = fixtures::one_object_category(fixtures::cyclic_monoid(3));
        std::vector<int> gen{1};
        CHECK(category_slack_hopf(c, gen, gen));
    }
    SUBCASE("endomorphism family shape is enforced") {
        FinCategory c = fixtures::interval_category();
        CHECK_THROWS_AS(category_slack_hopf(c, {2, 1}, {0, 1}), DimensionMismatch);
    }
}

TEST_CASE("exhaustive witness search on categories") {
    auto z2 = fixtures::one_object_category(fixtures::cyclic_monoid(2));
    CHECK(exists_category_slack_hopf(z2).has_value());
    CHECK_FALSE(exists_category_slack_hopf(fixtures::interval_category()).has_value());
    CHECK(exists_category_slack_hopf(fixtures::pair_groupoid2()).has_value());
    CHECK(exists_category_slack_hopf(fixtures::discrete_category(3)).has_value());
    CHECK_FALSE(exists_category_slack_hopf(fixtures::span_category()).has_value());

    SUBCASE("the returned witness is the lexicographically least one") {
        auto w = exists_category_slack_hopf(z2);
        REQUIRE(w.has_value());
        // identities come first in the morphism list of the fixture
        CHECK(w->a == std::vector<int>{0});
        CHECK(w->b == std::vector<int>{0});
    }
    SUBCASE("budget overrun raises") {
        auto z4 = fixtures::one_object_category(fixtures::cyclic_monoid(4));
        CHECK_THROWS_AS(exists_category_slack_hopf(z4, 8), BoundExceeded);
    }
}

TEST_CASE("monoid witnesses") {
    auto z3 = fixtures::cyclic_monoid(3);
    auto w = monoid_slack_hopf(z3);
    REQUIRE(w.has_value());
    CHECK(w->a == 0); // unit pair is lexicographically least
    CHECK(w->b == 0);

    CHECK_FALSE(monoid_slack_hopf(fixtures::bool_monoid()).has_value());      // 4 candidate pairs
    CHECK_FALSE(monoid_slack_hopf(fixtures::min_truncation_monoid()).has_value()); // 9 candidate pairs
}

TEST_CASE("witness existence is equivalent to being a groupoid / group over the corpus") {
    std::vector<FinCategory> cats = {
        fixtures::one_object_category(fixtures::cyclic_monoid(2)),
        fixtures::one_object_category(fixtures::cyclic_monoid(3)),
        fixtures::one_object_category(fixtures::bool_monoid()),
        fixtures::interval_category(),
        fixtures::discrete_category(2),
        fixtures::pair_groupoid2(),
        fixtures::span_category(),
    };
    for (const auto& c : cats) {
        REQUIRE(validate_category(c).ok());
        CHECK(exists_category_slack_hopf(c).has_value() == is_groupoid(c));
    }

    std::vector<FinMonoid> monoids = {
        fixtures::cyclic_monoid(2), fixtures::cyclic_monoid(3), fixtures::cyclic_monoid(4),
        fixtures::klein_monoid(),   fixtures::bool_monoid(),    fixtures::min_truncation_monoid(),
    };
    for (const auto& m : monoids) {
        REQUIRE(validate_monoid(m).ok());
        CHECK(monoid_slack_hopf(m).has_value() == is_group(m));
    }
}

TEST_CASE("identity witnesses mean the plain fusion map is bijective") {
    for (const auto& m : {fixtures::cyclic_monoid(2), fixtures::cyclic_monoid(4), fixtures::klein_monoid()}) {
        auto w = monoid_slack_hopf(m);
        REQUIRE(w.has_value());
        if (w->a == m.unit && w->b == m.unit) {
            // (x, y) |-> (x, xy) must be a bijection of M x M
            CHECK(monoid_slack_hopf_pair(m, m.unit, m.unit));
        }
    }
}
