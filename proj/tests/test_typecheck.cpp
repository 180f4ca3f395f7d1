#include "doctest.h"

#include "mint/parse.hpp"
#include "mint/subst.hpp"
#include "mint/typecheck.hpp"
#include "support/gen.hpp"

using namespace mint;

namespace {

CheckErrorKind failure(const Checker& ck, const CtxStack& g, const TermPtr& t, const TermPtr& ty) {
    try {
        ck.check_typed(g, t, ty);
    } catch (const CheckError& e) {
        return e.kind();
    }
    FAIL("expected a check error");
    return CheckErrorKind::CannotInfer;
}

const Flavor all_flavors[] = {Flavor::K, Flavor::T, Flavor::K4, Flavor::S4};

}  // namespace

TEST_CASE("stack well-formedness") {
    Checker ck(Flavor::S4);
    CHECK_NOTHROW(ck.check_stack(CtxStack::initial()));
    CHECK_NOTHROW(ck.check_stack(CtxStack{{{}, {box_ty(nat())}}}));
    try {
        ck.check_stack(CtxStack{{{nat(), var(0)}}});
        CHECK(false);
    } catch (const CheckError& e) {
        CHECK(e.kind() == CheckErrorKind::NotAUniverse);
    }
    try {
        ck.check_stack(CtxStack{});
        CHECK(false);
    } catch (const CheckError& e) {
        CHECK(e.kind() == CheckErrorKind::MalformedStack);
    }
}

TEST_CASE("the modal axioms infer in the right flavors") {
    Checker s4(Flavor::S4), k(Flavor::K), t(Flavor::T);
    CtxStack g = CtxStack::initial();
    TermPtr four = lam(box(box(unbox(2, var(0)))));
    TermPtr four_ty = pi(box_ty(nat()), box_ty(box_ty(nat())));
    CHECK_NOTHROW(s4.check_typed(g, four, four_ty));
    try {
        k.check_typed(g, four, four_ty);
        CHECK(false);
    } catch (const CheckError& e) {
        CHECK(e.kind() == CheckErrorKind::FlavorViolation);
        CHECK(e.level() == 2);
    }
    TermPtr tee = lam(unbox(0, var(0)));
    CHECK_NOTHROW(t.check_typed(g, tee, pi(box_ty(nat()), nat())));

    // inference proper, for a redex-headed term
    CtxStack gx{{{box_ty(nat())}}};
    ValuePtr a = s4.infer(gx, app(lam(box(box(unbox(2, var(0))))), var(0)));
    CHECK(equal(rb_ty({1}, a), box_ty(box_ty(nat()))));
}

TEST_CASE("checking examples") {
    Checker ck(Flavor::S4);
    CtxStack g = CtxStack::initial();
    CHECK_NOTHROW(ck.check_typed(g, box(zero()), box_ty(nat())));
    CHECK_NOTHROW(ck.check_typed(g, lam(var(0)), pi(nat(), nat())));
    CHECK(failure(ck, g, zero(), pi(nat(), nat())) == CheckErrorKind::ConversionFailure);
    CHECK(failure(ck, g, lam(var(0)), nat()) == CheckErrorKind::NotAFunction);
    CHECK(failure(ck, g, box(zero()), nat()) == CheckErrorKind::NotABox);
    CHECK(failure(ck, g, var(0), nat()) == CheckErrorKind::UnboundVariable);
    CHECK(failure(ck, g, app(zero(), zero()), nat()) == CheckErrorKind::NotAFunction);
    CHECK(failure(ck, g, unbox(0, zero()), nat()) == CheckErrorKind::NotABox);
    CHECK(failure(ck, g, unbox(1, zero()), nat()) == CheckErrorKind::MalformedStack);
    CHECK(failure(ck, g, zero(), zero()) == CheckErrorKind::NotAUniverse);
    CHECK(failure(ck, g, univ(1), univ(0)) == CheckErrorKind::UniverseMismatch);
    CHECK(failure(ck, g, univ(64), univ(65)) == CheckErrorKind::UniverseMismatch);

    // conversion failures carry both normal forms
    try {
        ck.check_typed(g, zero(), box_ty(nat()));
        CHECK(false);
    } catch (const CheckError& e) {
        REQUIRE(e.kind() == CheckErrorKind::ConversionFailure);
        CHECK(equal(e.expected(), box_ty(nat())));
        CHECK(equal(e.got(), nat()));
    }
}

TEST_CASE("substitution typing") {
    Checker s4(Flavor::S4), k(Flavor::K);
    auto ctx = [&](const Checker& c, const CtxStack& g) { return c.check_stack(g); };
    CtxStack g1{{{nat()}}};
    CHECK_NOTHROW(s4.check_subst(ctx(s4, g1), id_subst(), ctx(s4, g1)));
    CtxStack two{{{}, {}}};
    CHECK_NOTHROW(s4.check_subst(ctx(s4, two), modal_ext(id_subst(), 1), ctx(s4, two)));
    CHECK_NOTHROW(k.check_subst(ctx(k, two), modal_ext(id_subst(), 1), ctx(k, two)));
    try {
        k.check_subst(ctx(k, CtxStack::initial()), modal_ext(id_subst(), 0), ctx(k, two));
        CHECK(false);
    } catch (const CheckError& e) {
        CHECK(e.kind() == CheckErrorKind::FlavorViolation);
        CHECK(e.level() == 0);
    }
    CHECK_NOTHROW(s4.check_subst(ctx(s4, CtxStack::initial()), modal_ext(id_subst(), 0), ctx(s4, two)));
    CHECK_NOTHROW(s4.check_subst(ctx(s4, g1), wk(), ctx(s4, CtxStack::initial())));
    CHECK_NOTHROW(s4.check_subst(ctx(s4, CtxStack::initial()), ext(id_subst(), zero()), ctx(s4, g1)));
    try {
        s4.check_subst(ctx(s4, CtxStack::initial()), ext(id_subst(), box(zero())), ctx(s4, g1));
        CHECK(false);
    } catch (const CheckError& e) {
        CHECK(e.kind() == CheckErrorKind::NotABox);
    }
    // the middle stack of a composition is inferred through an extension with a closed type
    CHECK_NOTHROW(s4.check_subst(ctx(s4, CtxStack::initial()), comp(wk(), ext(id_subst(), zero())),
                                 ctx(s4, CtxStack::initial())));
    CHECK_THROWS_AS(s4.check_subst(ctx(s4, CtxStack::initial()), comp(wk(), ext(id_subst(), lam(var(0)))),
                                   ctx(s4, CtxStack::initial())),
                    CheckError);
    try {
        s4.check_subst(ctx(s4, g1), id_subst(), ctx(s4, CtxStack::initial()));
        CHECK(false);
    } catch (const CheckError& e) {
        CHECK(e.kind() == CheckErrorKind::SubstitutionMismatch);
    }
}

TEST_CASE("beta substitutions type exactly when the flavor allows the offset") {
    for (Flavor f : all_flavors) {
        Checker ck(f);
        for (std::size_t n = 0; n < 4; ++n) {
            // Γ⃗ = ε;(Nat);·ⁿ  and  Δ⃗ = ε;(Nat);·
            CtxStack dom{{{nat()}}};
            for (std::size_t i = 0; i < n; ++i) dom.worlds.emplace_back();
            CtxStack cod{{{nat()}, {}}};
            bool ok = true;
            try {
                ck.check_subst(ck.check_stack(dom), mot_subst(n, 0), ck.check_stack(cod));
            } catch (const CheckError&) {
                ok = false;
            }
            CHECK(ok == allows(f, n));
        }
    }
}

TEST_CASE("conversion and cumulativity") {
    Checker ck(Flavor::S4);
    Ctx c = Ctx::initial();
    CHECK(ck.convertible(c, d_nat(), d_nat()));
    ValuePtr via_sub = eval(sub(box_ty(nat()), id_subst()), Envs());
    CHECK(ck.convertible(c, via_sub, d_box_ty(d_nat())));
    CHECK(ck.subtype(c, d_univ(0), d_univ(1)));
    CHECK_FALSE(ck.subtype(c, d_univ(1), d_univ(0)));
    CHECK_FALSE(ck.convertible(c, d_univ(0), d_univ(1)));
    // invariant under Π
    CHECK_FALSE(ck.subtype(c, d_pi(d_nat(), Closure{univ(0), Envs()}), d_pi(d_nat(), Closure{univ(1), Envs()})));
    CHECK_NOTHROW(ck.check_typed(CtxStack::initial(), nat(), univ(3)));
    CHECK_NOTHROW(ck.check_typed(CtxStack::initial(), pi(univ(0), var(0)), univ(1)));
    CHECK(failure(ck, CtxStack::initial(), pi(univ(0), var(0)), univ(0)) == CheckErrorKind::UniverseMismatch);
}

TEST_CASE("axiom matrix") {
    struct Row {
        const char* term;
        const char* type;
        bool accept[4];
    };
    const Row rows[] = {
        {"fn A. fn B. fn f. fn x. box ((unbox 1 f) (unbox 1 x))",
         "(A : [] Ty 0) -> (B : [] Ty 0) -> [] (unbox 1 A -> unbox 1 B) -> [] (unbox 1 A) -> [] (unbox 1 B)",
         {true, true, true, true}},
        {"fn A. fn x. unbox 0 x", "(A : [] Ty 0) -> [] (unbox 1 A) -> unbox 0 A", {false, true, false, true}},
        {"fn A. fn x. box (box (unbox 2 x))", "(A : [] Ty 0) -> [] (unbox 1 A) -> [] [] (unbox 2 A)",
         {false, false, true, true}},
        {"fn x. box (unbox 1 x)", "Nat -> [] Nat", {false, false, false, false}},
    };
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < 4; ++i) {
            bool ok = true;
            try {
                Checker(all_flavors[i]).check_typed(CtxStack::initial(), parse_core(r.term), parse_core(r.type));
            } catch (const Error&) {
                ok = false;
            }
            INFO(r.term, " in ", flavor_name(all_flavors[i]));
            CHECK(ok == r.accept[i]);
        }
    }
}

TEST_CASE("flavor monotonicity and subject normalization over the corpus") {
    for (const auto& tt : testing::corpus(30, 77)) {
        Checker own(tt.flavor);
        REQUIRE_NOTHROW(own.check_typed(tt.stack, tt.term, tt.type));
        auto accepts = [&](Flavor f) {
            try {
                Checker(f).check_typed(tt.stack, tt.term, tt.type);
                return true;
            } catch (const Error&) {
                return false;
            }
        };
        if (tt.flavor == Flavor::K) {
            CHECK(accepts(Flavor::T));
            CHECK(accepts(Flavor::K4));
        }
        CHECK(accepts(Flavor::S4));

        Ctx c = own.check_stack(tt.stack);
        ValuePtr expected = eval(tt.type, c.env());
        TermPtr n = nbe(tt.stack, tt.term, tt.type);
        CHECK_NOTHROW(own.check(c, n, expected));
        // neutral normal forms synthesize; their type must match the original
        ValuePtr t1;
        try {
            t1 = own.infer(c, tt.term);
        } catch (const CheckError&) {
        }
        if (t1 && classify_nf(n) == NfClass::Ne) {
            ValuePtr t2;
            REQUIRE_NOTHROW(t2 = own.infer(c, n));
            CHECK(own.convertible(c, t1, t2));
        }
    }
}
