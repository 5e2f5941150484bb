#include "doctest.h"

#include "fixtures.hpp"

using namespace slackhopf;

TEST_CASE("counit flags") {
    Field<Rational> f;
    SUBCASE("group-like counit is a bialgebra counit") {
        ComagmaAlgebra<Rational> c = fixtures::kz2(f);
        CounitData<Rational> eps = fixtures::grouplike_counit(c);
        CHECK(eps.algebra_morphism);
        CHECK(eps.left_counit);
        CHECK(eps.bialgebra_counit);
    }
    SUBCASE("Delta(x) = x (x) 1 only satisfies the counit law on the right") {
        ComagmaAlgebra<Rational> c = fixtures::comagma_right_unit(fixtures::kz2(f).alg);
        CounitData<Rational> eps = fixtures::grouplike_counit(c);
        CHECK(eps.algebra_morphism);
        CHECK_FALSE(eps.left_counit); // (eps (x) A)(x (x) 1) = eps(x) 1 != x
        CHECK_FALSE(eps.bialgebra_counit);
    }
    SUBCASE("M_2 admits no counit: no algebra morphism to the ground field") {
        // a morphism would send each e_ii to an idempotent scalar summing to 1
        // while killing products e_01 e_10; every natural candidate row fails
        ComagmaAlgebra<Rational> c = fixtures::m2_flip(f);
        Mat<Rational> ones = Mat<Rational>::Constant(1, 4, f.one());
        CHECK_FALSE(make_counit(c, ones).algebra_morphism);
        Mat<Rational> diag = Mat<Rational>::Constant(1, 4, f.zero());
        diag(0, 0) = f.one();
        diag(0, 3) = f.one();
        CHECK_FALSE(make_counit(c, diag).algebra_morphism);
    }
    SUBCASE("the 4-dimensional Hopf fixture has a bialgebra counit") {
        ComagmaAlgebra<Rational> c = fixtures::sweedler_h4(f);
        CounitData<Rational> eps = fixtures::h4_counit(c);
        CHECK(eps.bialgebra_counit);
    }
}

TEST_CASE("antipode data from the certificate") {
    Field<Rational> f;
    SUBCASE("k[Z/2]: sigma is inversion, a = b = 1") {
        ComagmaAlgebra<Rational> c = fixtures::kz2(f);
        CounitData<Rational> eps = fixtures::grouplike_counit(c);
        SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
        AntipodeData<Rational> data = extract_antipode_data(cert, c, eps);
        CHECK(is_zero_mat<Rational>(
            Mat<Rational>(data.sigma - fixtures::inversion_antipode(c.alg, fixtures::group_inverses(fixtures::cyclic_table(2), 0)))));
        CHECK(data.a_elem == c.alg.unit());
        CHECK(data.b_elem == c.alg.unit());
    }
    SUBCASE("k[Z/3]: sigma(g) = g^2") {
        ComagmaAlgebra<Rational> c = fixtures::kz3(f);
        CounitData<Rational> eps = fixtures::grouplike_counit(c);
        SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
        AntipodeData<Rational> data = extract_antipode_data(cert, c, eps);
        CHECK(data.sigma.col(1) == c.alg.basis_vec(2));
        CHECK(data.sigma.col(2) == c.alg.basis_vec(1));
        CHECK(data.a_elem == c.alg.unit());
        CHECK(data.b_elem == c.alg.unit());
    }
    SUBCASE("the 4-dimensional fixture recovers its textbook antipode") {
        ComagmaAlgebra<Rational> c = fixtures::sweedler_h4(f);
        CounitData<Rational> eps = fixtures::h4_counit(c);
        SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
        AntipodeData<Rational> data = extract_antipode_data(cert, c, eps);
        CHECK(is_zero_mat<Rational>(Mat<Rational>(data.sigma - fixtures::h4_antipode_table(c.alg))));
    }
    SUBCASE("identity checks reject a forged certificate") {
        ComagmaAlgebra<Rational> c = fixtures::kz2(f);
        CounitData<Rational> eps = fixtures::grouplike_counit(c);
        SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
        cert.w.coeffs += basis_pair(c.alg, 0, 1).coeffs;
        CHECK_THROWS_AS(extract_antipode_data(cert, c, eps), IdentityViolation);
    }
}

TEST_CASE("convolution algebra") {
    Field<Rational> f;
    ComagmaAlgebra<Rational> c = fixtures::kz2(f);
    CounitData<Rational> eps = fixtures::grouplike_counit(c);
    const Mat<Rational> id = identity(f, 2);
    const Mat<Rational> unit_map = convolution_unit(c, eps);

    SUBCASE("u . eps is the convolution unit") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 20; ++trial) {
            Mat<Rational> g(2, 2);
            for (Eigen::Index i = 0; i < 2; ++i)
                for (Eigen::Index j = 0; j < 2; ++j) g(i, j) = f.random(rng);
            CHECK(is_zero_mat<Rational>(Mat<Rational>(convolution(unit_map, g, c, eps) - g)));
            CHECK(is_zero_mat<Rational>(Mat<Rational>(convolution(g, unit_map, c, eps) - g)));
        }
    }
    SUBCASE("id * id squares the group-likes") {
        Mat<Rational> sq = convolution(id, id, c, eps);
        CHECK(Vec<Rational>(sq.col(0)) == c.alg.basis_vec(0)); // 1 -> 1
        CHECK(Vec<Rational>(sq.col(1)) == c.alg.basis_vec(0)); // g -> g^2 = 1
    }
    SUBCASE("S * id = u . eps for the certificate antipode") {
        SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
        AntipodeResult<Rational> ar = build_antipode(extract_antipode_data(cert, c, eps), c, eps);
        REQUIRE(ar.kind == AntipodeKind::Antipode);
        CHECK(is_zero_mat<Rational>(Mat<Rational>(convolution(*ar.S, id, c, eps) - unit_map)));
        CHECK(is_zero_mat<Rational>(Mat<Rational>(convolution(id, *ar.S, c, eps) - unit_map)));
    }
    SUBCASE("convolution is associative on random triples") {
        ComagmaAlgebra<Rational> h4 = fixtures::sweedler_h4(f);
        CounitData<Rational> eps4 = fixtures::h4_counit(h4);
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 25; ++trial) {
            Mat<Rational> x(4, 4), y(4, 4), z(4, 4);
            for (Eigen::Index i = 0; i < 4; ++i)
                for (Eigen::Index j = 0; j < 4; ++j) {
                    x(i, j) = f.random(rng);
                    y(i, j) = f.random(rng);
                    z(i, j) = f.random(rng);
                }
            Mat<Rational> lhs = convolution(convolution(x, y, h4, eps4), z, h4, eps4);
            Mat<Rational> rhs = convolution(x, convolution(y, z, h4, eps4), h4, eps4);
            CHECK(is_zero_mat<Rational>(Mat<Rational>(lhs - rhs)));
        }
    }
}

TEST_CASE("build_antipode on group algebras recovers inversion") {
    Field<Rational> f;
    for (auto table : {fixtures::cyclic_table(2), fixtures::cyclic_table(3), fixtures::s3_table()}) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < table.size(); ++i) names.push_back("g" + std::to_string(i));
        ComagmaAlgebra<Rational> c = fixtures::group_algebra(f, table, names);
        CounitData<Rational> eps = fixtures::grouplike_counit(c);
        SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
        AntipodeResult<Rational> ar = build_antipode(extract_antipode_data(cert, c, eps), c, eps);
        REQUIRE(ar.kind == AntipodeKind::Antipode);
        CHECK(is_zero_mat<Rational>(
            Mat<Rational>(*ar.S - fixtures::inversion_antipode(c.alg, fixtures::group_inverses(table, 0)))));
    }
}

TEST_CASE("build_antipode on the 4-dimensional fixture") {
    Field<Rational> f;
    ComagmaAlgebra<Rational> c = fixtures::sweedler_h4(f);
    CounitData<Rational> eps = fixtures::h4_counit(c);
    SlackHopfCertificate<Rational> cert = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
    AntipodeResult<Rational> ar = build_antipode(extract_antipode_data(cert, c, eps), c, eps);
    REQUIRE(ar.kind == AntipodeKind::Antipode);
    CHECK(is_zero_mat<Rational>(Mat<Rational>(*ar.S - fixtures::h4_antipode_table(c.alg))));
}

TEST_CASE("fusion operator singular/invertible fixtures") {
    Field<Rational> f;
    CHECK(solve_or_invert(f, fusion_operator(fixtures::kz2(f))).invertible());
    CHECK_FALSE(solve_or_invert(f, fusion_operator(fixtures::m2_flip(f))).invertible());
    CHECK_FALSE(solve_or_invert(f, fusion_operator(fixtures::bool_monoid_algebra(f))).invertible());
}

TEST_CASE("commutative criterion: slack structures are exactly the units of A^e") {
    for (std::uint32_t p : {2u, 3u}) {
        Field<Fp> f{p};
        SUBCASE(("group algebra over GF(" + std::to_string(p) + ")").c_str()) {
            ComagmaAlgebra<Fp> c = fixtures::kz2(f);
            REQUIRE(solve_or_invert(f, fusion_operator(c)).invertible());
            auto slack_set = enumerate_slack_structures(c);
            std::size_t units = 0;
            for_each_tensor(f, 2, c.alg.dim(), [&](const TensorElement<Fp>& g) {
                const bool is_unit = env_invert(c.alg, g).has_value();
                bool in_slack = false;
                for (const auto& s : slack_set) in_slack |= (s == g);
                CHECK(is_unit == in_slack);
                if (is_unit) ++units;
                return false;
            });
            CHECK(units == slack_set.size());
        }
        SUBCASE(("idempotent monoid algebra over GF(" + std::to_string(p) + ")").c_str()) {
            ComagmaAlgebra<Fp> c = fixtures::bool_monoid_algebra(f);
            CHECK_FALSE(solve_or_invert(f, fusion_operator(c)).invertible());
            CHECK(enumerate_slack_structures(c).empty());
        }
    }
}

TEST_CASE("antipode is independent of the slack structure on a group algebra") {
    Field<Rational> f;
    ComagmaAlgebra<Rational> c = fixtures::kz3(f);
    CounitData<Rational> eps = fixtures::grouplike_counit(c);
    SlackHopfCertificate<Rational> base = *check_slack_structure(c, unit_tensor(c.alg, 2)).cert;
    const Mat<Rational> inversion =
        fixtures::inversion_antipode(c.alg, fixtures::group_inverses(fixtures::cyclic_table(3), 0));

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        TensorElement<Rational> g = fixtures::random_env_unit(c.alg, rng);
        TensorElement<Rational> v = torsor_act(base, g);
        SlackCheckResult<Rational> chk = check_slack_structure(c, v);
        REQUIRE(chk.slack());
        AntipodeResult<Rational> ar = build_antipode(extract_antipode_data(*chk.cert, c, eps), c, eps);
        REQUIRE(ar.kind == AntipodeKind::Antipode);
        CHECK(is_zero_mat<Rational>(Mat<Rational>(*ar.S - inversion)));
    }
}
