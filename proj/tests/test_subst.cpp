#include "doctest.h"

#include "mint/eval.hpp"
#include "mint/readback.hpp"
#include "mint/subst.hpp"
#include "mint/typecheck.hpp"
#include "support/gen.hpp"
#include "support/reference.hpp"

using namespace mint;

TEST_CASE("truncation offset clauses") {
    testing::Rng rng(3);
    for (int i = 0; i < 50; ++i) CHECK(trunc_offset(testing::random_raw_subst(rng, 4), 0) == 0);
    CHECK(trunc_offset(modal_ext(id_subst(), 2), 1) == 2);
    CHECK(trunc_offset(comp(modal_ext(id_subst(), 2), modal_ext(id_subst(), 3)), 1) == 4);
    CHECK(trunc_offset(wk(), 3) == 3);
    CHECK(trunc_offset(ext(modal_ext(id_subst(), 0), zero()), 2) == 1);
}

TEST_CASE("truncation offset agrees with the clause model") {
    testing::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        SubstPtr s = testing::random_raw_subst(rng, 5);
        auto f = reference::offset_map(s);
        for (std::size_t n = 0; n < 5; ++n) CHECK(trunc_offset(s, n) == f(n));
    }
    CHECK(reference::offset_map(comp(modal_ext(id_subst(), 2), modal_ext(id_subst(), 3)))(1) == 4);
}

TEST_CASE("truncation clauses") {
    CHECK(equal(truncate(ext(id_subst(), zero()), 1), id_subst()));
    CHECK(equal(truncate(modal_ext(id_subst(), 3), 1), id_subst()));
    CHECK(equal(truncate(wk(), 1), id_subst()));
    SubstPtr s = comp(modal_ext(id_subst(), 2), modal_ext(id_subst(), 3));
    CHECK(equal(truncate(s, 1), comp(id_subst(), truncate(modal_ext(id_subst(), 3), 2))));
    CHECK(equal(truncate(s, 1), comp(id_subst(), id_subst())));
    CHECK(equal(truncate(s, 0), s));
}

TEST_CASE("truncation agrees with the shifted offset map") {
    testing::Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        SubstPtr s = testing::random_raw_subst(rng, 5);
        for (std::size_t n = 0; n < 4; ++n) {
            auto f = reference::truncated_offset_map(s, n);
            for (std::size_t m = 0; m < 4; ++m) CHECK(trunc_offset(truncate(s, n), m) == f(m));
        }
    }
}

TEST_CASE("lifting and modal transformations") {
    CHECK(equal(q_lift(id_subst()), ext(comp(id_subst(), wk()), var(0))));
    CHECK(equal(q_lift(wk()), ext(comp(wk(), wk()), var(0))));
    CHECK(equal(q_lift(q_lift(id_subst())), ext(comp(ext(comp(id_subst(), wk()), var(0)), wk()), var(0))));
    CHECK(equal(mot_subst(2, 0), modal_ext(id_subst(), 2)));
    CHECK(equal(mot_subst(1, 0), modal_ext(id_subst(), 1)));
    CHECK(equal(mot_subst(0, 1), modal_ext(modal_ext(id_subst(), 0), 1)));
    CHECK(equal(mot_subst(3, 2), modal_ext(modal_ext(modal_ext(id_subst(), 3), 1), 1)));
}

TEST_CASE("fusion one world below the top") {
    // x : [] [] Nat at the bottom, two empty worlds above; {0/1} fuses the
    // two worlds under the top one.
    CtxStack cod{{{box_ty(box_ty(nat()))}, {}, {}}};
    CtxStack dom{{{box_ty(box_ty(nat()))}, {}}};
    TermPtr t = unbox(1, unbox(1, var(0)));
    Checker ck(Flavor::S4);
    ck.check_subst(ck.check_stack(dom), mot_subst(0, 1), ck.check_stack(cod));
    TermPtr lhs = nbe(dom, sub(t, mot_subst(0, 1), cod), nat());
    // the same term with the two unbox levels fused
    TermPtr rhs = nbe(dom, unbox(1, unbox(0, var(0))), nat());
    CHECK(equal(lhs, rhs));
}

TEST_CASE("typed substitutions: offset laws and the environment model") {
    for (Flavor f : {Flavor::K, Flavor::T, Flavor::K4, Flavor::S4}) {
        testing::Generator gen(f, 500 + static_cast<int>(f));
        Checker ck(f);
        for (int i = 0; i < 60; ++i) {
            testing::GStack g = gen.stack();
            testing::TypedSubst s = gen.subst(g, 3);
            CtxStack dom = testing::to_ctx(s.domain), cod = testing::to_ctx(s.codomain);
            INFO(debug_string(s.subst));
            REQUIRE_NOTHROW(ck.check_subst(ck.check_stack(dom), s.subst, ck.check_stack(cod)));
            Envs rho = initial_env(dom);
            Envs out = eval_subst(s.subst, rho);
            for (std::size_t n = 0; n < cod.depth(); ++n) {
                std::size_t l = trunc_offset(s.subst, n);
                CHECK(l < dom.depth());
                CHECK(envs_offset(out, n) == envs_offset(rho, l));
                CHECK(equal(envs_trunc(out, n), eval_subst(truncate(s.subst, n), envs_trunc(rho, l))));
            }
        }
    }
}
