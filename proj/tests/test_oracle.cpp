#include "doctest.h"

#include <set>

#include "mint/oracle.hpp"
#include "mint/readback.hpp"
#include "support/gen.hpp"

using namespace mint;
using namespace mint::oracle;

namespace {
bool has_rewrite(const TermPtr& t, Rule r, const Path& p, const TermPtr& result) {
    for (const auto& rw : rewrite_step(t))
        if (rw.rule == r && rw.path == p && oracle::equal(rw.result, Node(result))) return true;
    return false;
}
}  // namespace

TEST_CASE("rule registry") {
    const auto& reg = registry();
    CHECK(reg.size() == 30);
    std::set<std::string_view> names;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(static_cast<std::size_t>(reg[i].rule) == i);
        CHECK(!reg[i].equation.empty());
        names.insert(reg[i].name);
    }
    CHECK(names.size() == reg.size());
    std::size_t expansions = 0;
    for (const auto& ri : reg) expansions += ri.expansion ? 1 : 0;
    CHECK(expansions == 4);
    CHECK(info(Rule::BetaBox).name == "beta-box");
}

TEST_CASE("single-step rewrites") {
    CHECK(has_rewrite(app(lam(var(0)), zero()), Rule::BetaPi, {}, sub(var(0), ext(id_subst(), zero()))));
    CHECK(has_rewrite(unbox(2, box(zero())), Rule::BetaBox, {}, sub(zero(), modal_ext(id_subst(), 2))));
    TermPtr base = succ(zero());
    CHECK(has_rewrite(nat_elim(nat(), base, succ(var(0)), zero()), Rule::BetaZero, {}, base));
    // inside a successor
    CHECK(has_rewrite(succ(app(lam(var(0)), zero())), Rule::BetaPi, {0}, sub(var(0), ext(id_subst(), zero()))));
    // substitution positions are reachable too
    TermPtr t = sub(var(0), comp(id_subst(), ext(id_subst(), zero())));
    CHECK(has_rewrite(t, Rule::SubComp, {}, sub(sub(var(0), id_subst()), ext(id_subst(), zero()))));
    bool found = false;
    for (const auto& rw : rewrite_step(t))
        if (rw.rule == Rule::CompIdLeft && rw.path == Path{1}) found = true;
    CHECK(found);
}

TEST_CASE("bounded equivalence examples") {
    Verdict a = bounded_equiv(app(lam(var(0)), zero()), zero(), 4);
    CHECK(a.equiv);
    CHECK(replays(app(lam(var(0)), zero()), zero(), a));
    Verdict b = bounded_equiv(unbox(1, box(zero())), zero(), 6);
    CHECK(b.equiv);
    CHECK(replays(unbox(1, box(zero())), zero(), b));
    Verdict c = bounded_equiv(zero(), succ(zero()), 12);
    CHECK_FALSE(c.equiv);
    CHECK(c.reason == "distinct normal forms");
    // η on both sides of a root mismatch
    CHECK(bounded_equiv(var(0), lam(app(var(1), var(0))), 4).equiv);
    CHECK(bounded_equiv(box(unbox(1, var(0))), var(0), 4).equiv);
}

TEST_CASE("limits are honored") {
    // a rewrite chain longer than the budget
    TermPtr t = zero();
    for (int i = 0; i < 40; ++i) t = app(lam(var(0)), t);
    Limits tight;
    tight.step_budget = 5;
    Verdict v = bounded_equiv(t, zero(), tight);
    CHECK_FALSE(v.equiv);
    CHECK(v.reason == "step budget exhausted");
    CHECK(bounded_equiv(t, zero(), 1).equiv);
    Limits one;
    one.depth = 1;
    CHECK_FALSE(bounded_equiv(var(0), lam(app(var(1), var(0))), one).equiv);
}

TEST_CASE("tampered traces do not replay") {
    TermPtr t = app(lam(succ(var(0))), zero());
    Verdict v = bounded_equiv(t, succ(zero()), 12);
    REQUIRE(v.equiv);
    REQUIRE(!v.trace.left.empty());
    CHECK(replays(t, succ(zero()), v));
    Verdict bad = v;
    bad.trace.left.front().rule = Rule::BetaBox;
    CHECK_FALSE(replays(t, succ(zero()), bad));
    Verdict wrong = v;
    wrong.trace.left.back().result = Node(nat());
    CHECK_FALSE(replays(t, succ(zero()), wrong));
}

TEST_CASE("oracle agrees with nbe on the corpus") {
    auto c = testing::corpus(25, 404);
    std::size_t resolved = 0;
    for (const auto& tt : c) {
        TermPtr n = nbe(tt.stack, tt.term, tt.type);
        Verdict v = bounded_equiv(tt.term, n);
        CHECK(v.reason != "distinct normal forms");
        if (v.equiv) {
            ++resolved;
            CHECK(replays(tt.term, n, v));
        }
    }
    CHECK(resolved * 2 >= c.size());

    // pairs of terms at the same stack and type: Equiv implies equal normal forms
    std::size_t agreed = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto& x = c[i];
        const auto& y = c[i + 1];
        if (!mint::equal(x.stack, y.stack) || !mint::equal(x.type, y.type)) continue;
        Verdict v = bounded_equiv(x.term, y.term);
        bool same_nf = mint::equal(nbe(x.stack, x.term, x.type), nbe(y.stack, y.term, y.type));
        if (v.equiv) CHECK(same_nf);
        ++agreed;
    }
    CHECK(agreed > 0);
}
