#include "doctest.h"

#include "mint/domain.hpp"
#include "support/gen.hpp"
#include "support/reference.hpp"

using namespace mint;

TEST_CASE("UMoT canonical form") {
    CHECK(UMoT({1, 1}).is_identity());
    CHECK(UMoT({2, 1}) == UMoT({2}));
    CHECK(UMoT({2, 1}).offsets().size() == 1);
    CHECK(UMoT({3}).at(7) == 1);
    CHECK(UMoT({4}).lift(0) == UMoT({0, 4}));
    CHECK(UMoT().lift(1).is_identity());
}

TEST_CASE("UMoT offsets and truncation") {
    for (std::size_t n = 0; n < 8; ++n) CHECK(umot_offset(UMoT::identity(), n) == n);
    CHECK(umot_offset(UMoT({5}), 2) == 6);
    CHECK(umot_trunc(UMoT({5, 2}), 1) == UMoT({2}));
    CHECK(umot_trunc(UMoT({5, 2}), 4).is_identity());
}

TEST_CASE("UMoT composition examples") {
    testing::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        UMoT k = testing::random_umot(rng);
        CHECK(umot_compose(UMoT::identity(), k) == k);
        CHECK(umot_compose(k, UMoT::identity()) == k);
    }
    CHECK(umot_compose(UMoT({2}), UMoT({3})) == UMoT({4}));
    CHECK(reference::compose_at(UMoT({2}), UMoT({3}), 0) == 4);
    for (std::size_t i = 1; i < 11; ++i) CHECK(reference::compose_at(UMoT({2}), UMoT({3}), i) == 1);
}

TEST_CASE("UMoT composition against the cumulative model") {
    testing::Rng rng(6);
    for (int i = 0; i < 400; ++i) {
        UMoT a = testing::random_umot(rng), b = testing::random_umot(rng);
        UMoT c = umot_compose(a, b);
        for (std::size_t p = 0; p < 11; ++p) CHECK(c.at(p) == reference::compose_at(a, b, p));
        for (std::size_t n = 0; n < 6; ++n)
            for (std::size_t p = 0; p < 6; ++p) CHECK(umot_trunc(a, n).at(p) == reference::trunc_at(a, n, p));
    }
}

TEST_CASE("values under modal transformations") {
    CHECK(equal(apply_umot(d_reflect(d_nat(), n_var(3)), UMoT({0, 5})), d_reflect(d_nat(), n_var(3))));
    testing::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        ValuePtr v = testing::random_value(rng, 4);
        CHECK(equal(apply_umot(v, UMoT::identity()), v));
    }
    NeutralPtr u = apply_umot(n_unbox(1, n_var(0)), UMoT({3}));
    CHECK(equal(u, n_unbox(3, n_var(0))));
    // the same through the cumulative model: offset at 1 and what is left
    CHECK(reference::cumulative(UMoT({3}), 1) == 3);
    for (std::size_t p = 0; p < 11; ++p) CHECK(reference::trunc_at(UMoT({3}), 1, p) == 1);

    // box moves under one lifted world
    ValuePtr b = d_box(d_reflect(d_nat(), n_unbox(2, n_var(0))));
    CHECK(equal(apply_umot(b, UMoT({4})), d_box(d_reflect(d_nat(), n_unbox(5, n_var(0))))));
}

TEST_CASE("environment operations") {
    Envs e;
    CHECK(equal(envs_trunc(envs_ext(e, 1), 1), e));
    CHECK(envs_offset(envs_ext(e, 3), 1) == 3);
    CHECK(envs_offset(e, 4) == 4);
    Envs f = envs_bind(envs_bind(envs_ext(e, 2), d_zero()), d_nat());
    CHECK(f.top_size() == 2);
    CHECK(equal(f.lookup(0), d_nat()));
    CHECK(equal(f.lookup(1), d_zero()));
    CHECK(f.lookup(2) == nullptr);
    CHECK(envs_drop(f).top_size() == 1);
    CHECK_THROWS_AS(envs_drop(envs_ext(e, 1)), EnvError);
    // an explicit (1, empty) frame equals the implicit tail
    CHECK(equal(envs_ext(e, 1), e));
    CHECK_FALSE(equal(envs_ext(e, 2), e));
}

TEST_CASE("environments under modal transformations") {
    Envs e = envs_ext(Envs(), 2);
    Envs r = apply_umot(e, UMoT({5}));
    CHECK(r.frame_offset(0) == 6);
    CHECK(r.frame_offset(0) == reference::envs_umot_frame_offset(e, UMoT({5}), 0));
    CHECK(equal(r, envs_ext(Envs(), 6)));
    CHECK(equal(apply_umot(e, UMoT::identity()), e));

    testing::Rng rng(10);
    for (int i = 0; i < 300; ++i) {
        Envs rho = testing::random_envs(rng, 3);
        UMoT k = testing::random_umot(rng);
        Envs out = apply_umot(rho, k);
        for (std::size_t n = 0; n < 6; ++n) {
            CHECK(out.frame_offset(n) == reference::envs_umot_frame_offset(rho, k, n));
            CHECK(envs_offset(out, n) == umot_offset(k, envs_offset(rho, n)));
            CHECK(equal(envs_trunc(out, n), apply_umot(envs_trunc(rho, n), umot_trunc(k, envs_offset(rho, n)))));
            for (std::size_t m = 0; m < 4; ++m)
                CHECK(envs_offset(rho, n + m) == envs_offset(rho, n) + envs_offset(envs_trunc(rho, n), m));
        }
    }
}

TEST_CASE("functoriality on random values and environments") {
    testing::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        ValuePtr v = testing::random_value(rng, 5);
        Envs rho = testing::random_envs(rng, 3);
        UMoT a = testing::random_umot(rng), b = testing::random_umot(rng);
        CHECK(equal(apply_umot(apply_umot(v, a), b), apply_umot(v, umot_compose(a, b))));
        CHECK(equal(apply_umot(apply_umot(rho, a), b), apply_umot(rho, umot_compose(a, b))));
    }
}
