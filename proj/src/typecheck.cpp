#include "mint/typecheck.hpp"

#include <algorithm>

namespace mint {

std::string_view check_error_name(CheckErrorKind k) {
    switch (k) {
        case CheckErrorKind::UnboundVariable: return "unbound-variable";
        case CheckErrorKind::NotAFunction: return "not-a-function";
        case CheckErrorKind::NotABox: return "not-a-box";
        case CheckErrorKind::NotAUniverse: return "not-a-universe";
        case CheckErrorKind::FlavorViolation: return "flavor-violation";
        case CheckErrorKind::UniverseMismatch: return "universe-mismatch";
        case CheckErrorKind::ConversionFailure: return "conversion-failure";
        case CheckErrorKind::MalformedStack: return "malformed-stack";
        case CheckErrorKind::SubstitutionMismatch: return "substitution-mismatch";
        case CheckErrorKind::CannotInfer: return "cannot-infer";
    }
    return "?";
}

Ctx Ctx::initial() {
    Ctx c;
    c.stack_ = CtxStack::initial();
    c.types_.emplace_back();
    return c;
}

ValuePtr Ctx::lookup(std::size_t index) const {
    const auto& top = types_.back();
    if (index >= top.size()) return nullptr;
    return top[top.size() - 1 - index];
}

Ctx Ctx::push_world() const {
    Ctx c = *this;
    c.stack_ = stack_.push_world();
    c.env_ = env_.ext(1);
    c.types_.emplace_back();
    return c;
}

ValuePtr Ctx::next_var(const ValuePtr& type) const { return d_reflect(type, n_var(top_size())); }

Ctx Ctx::bind(const ValuePtr& type) const {
    Ctx c = *this;
    c.stack_ = stack_.bind(rb_ty(lengths(), type));
    c.env_ = env_.bind(next_var(type));
    c.types_.back().push_back(type);
    return c;
}

Ctx Ctx::pop() const {
    if (top_size() == 0) throw StackError("no binding to remove from the topmost world");
    Ctx c = *this;
    c.stack_.worlds.back().pop_back();
    c.env_ = env_.drop();
    c.types_.back().pop_back();
    return c;
}

Ctx Ctx::truncate(std::size_t n) const {
    Ctx c;
    c.stack_ = stack_truncate(stack_, n);
    c.env_ = env_.trunc(n);
    c.types_.assign(types_.begin(), types_.end() - static_cast<std::ptrdiff_t>(n));
    return c;
}

namespace {
// (fn. b) s1 s2 ... becomes (fn. b s2' ...) s1 with the later arguments
// weakened past the binder, so a redex spine stays inferable. Null when the
// spine is not headed by a function literal.
TermPtr float_spine(const TermPtr& t) {
    const auto* a = t->as<term::App>();
    if (!a) return nullptr;
    if (a->fn->is<term::Lam>()) return t;
    TermPtr inner = float_spine(a->fn);
    if (!inner || contains_sub(a->arg)) return nullptr;
    const auto& redex = *inner->as<term::App>();
    const auto& l = *redex.fn->as<term::Lam>();
    return app(lam(app(l.body, shift(a->arg, 1))), redex.arg);
}
}  // namespace

void Checker::require_level(std::size_t n, const char* what) const {
    if (!allows(flavor_, n))
        throw CheckError(CheckErrorKind::FlavorViolation,
                         std::string(what) + " level " + std::to_string(n) + " is not allowed in flavor " +
                             std::string(flavor_name(flavor_)),
                         nullptr, nullptr, n);
}

Ctx Checker::check_stack(const CtxStack& stack) const {
    if (stack.worlds.empty()) throw CheckError(CheckErrorKind::MalformedStack, "a context stack has at least one world");
    Ctx ctx = Ctx::initial();
    for (std::size_t i = 0; i < stack.worlds.size(); ++i) {
        if (i > 0) ctx = ctx.push_world();
        for (const auto& ty : stack.worlds[i]) {
            check_type(ctx, ty);
            ctx = ctx.bind(eval(ty, ctx.env()));
        }
    }
    return ctx;
}

std::size_t Checker::check_type(const Ctx& ctx, const TermPtr& t) const {
    ValuePtr ty = infer(ctx, t);
    if (const auto* u = ty->as<dom::Univ>()) return u->level;
    throw CheckError(CheckErrorKind::NotAUniverse,
                     debug_string(t) + " has type " + debug_string(rb_ty(ctx.lengths(), ty)) + ", not a universe");
}

ValuePtr Checker::infer(const Ctx& ctx, const TermPtr& t) const {
    return std::visit(
        overloaded{
            [&](const term::Var& x) -> ValuePtr {
                ValuePtr ty = ctx.lookup(x.index);
                if (!ty)
                    throw CheckError(CheckErrorKind::UnboundVariable,
                                     "variable #" + std::to_string(x.index) + " is not bound in the topmost world");
                return ty;
            },
            [&](const term::Univ& x) -> ValuePtr {
                if (x.level >= universe_cap_)
                    throw CheckError(CheckErrorKind::UniverseMismatch,
                                     "Ty " + std::to_string(x.level) + " exceeds the universe cap " +
                                         std::to_string(universe_cap_));
                return d_univ(x.level + 1);
            },
            [&](const term::NatTy&) -> ValuePtr { return d_univ(0); },
            [&](const term::Zero&) -> ValuePtr { return d_nat(); },
            [&](const term::Succ& x) -> ValuePtr {
                check(ctx, x.pred, d_nat());
                return d_nat();
            },
            [&](const term::NatElim& x) -> ValuePtr {
                check(ctx, x.scrutinee, d_nat());
                Ctx with_n = ctx.bind(d_nat());
                check_type(with_n, x.motive);
                check(ctx, x.base, eval(x.motive, ctx.env().bind(d_zero())));
                ValuePtr n = ctx.next_var(d_nat());
                ValuePtr motive_n = eval(x.motive, ctx.env().bind(n));
                Ctx with_ih = with_n.bind(motive_n);
                check(with_ih, x.step, eval(x.motive, ctx.env().bind(d_succ(n))));
                return eval(x.motive, ctx.env().bind(eval(x.scrutinee, ctx.env())));
            },
            [&](const term::Pi& x) -> ValuePtr {
                std::size_t i = check_type(ctx, x.dom);
                std::size_t j = check_type(ctx.bind(eval(x.dom, ctx.env())), x.cod);
                return d_univ(std::max(i, j));
            },
            [&](const term::Lam&) -> ValuePtr {
                throw CheckError(CheckErrorKind::CannotInfer, "cannot infer the type of a bare function");
            },
            [&](const term::App& x) -> ValuePtr {
                if (!x.fn->is<term::Lam>()) {
                    if (TermPtr floated = float_spine(t)) return infer(ctx, floated);
                }
                if (const auto* l = x.fn->as<term::Lam>()) {
                    ValuePtr s_ty = infer(ctx, x.arg);
                    Ctx inner = ctx.bind(s_ty);
                    TermPtr body_ty = rb_ty(inner.lengths(), infer(inner, l->body));
                    return eval(body_ty, ctx.env().bind(eval(x.arg, ctx.env())));
                }
                ValuePtr f_ty = infer(ctx, x.fn);
                const auto* p = f_ty->as<dom::Pi>();
                if (!p)
                    throw CheckError(CheckErrorKind::NotAFunction,
                                     debug_string(x.fn) + " has type " + debug_string(rb_ty(ctx.lengths(), f_ty)));
                check(ctx, x.arg, p->dom);
                return apply_closure(p->cod, eval(x.arg, ctx.env()));
            },
            [&](const term::BoxTy& x) -> ValuePtr { return d_univ(check_type(ctx.push_world(), x.inner)); },
            [&](const term::BoxIntro& x) -> ValuePtr { return d_box_ty(infer(ctx.push_world(), x.body)); },
            [&](const term::Unbox& x) -> ValuePtr {
                require_level(x.level, "unbox");
                if (x.level >= ctx.depth())
                    throw CheckError(CheckErrorKind::MalformedStack,
                                     "unbox " + std::to_string(x.level) + " reaches past a stack of depth " +
                                         std::to_string(ctx.depth()));
                Ctx lower = ctx.truncate(x.level);
                ValuePtr ty = infer(lower, x.body);
                const auto* b = ty->as<dom::BoxTy>();
                if (!b)
                    throw CheckError(CheckErrorKind::NotABox,
                                     debug_string(x.body) + " has type " + debug_string(rb_ty(lower.lengths(), ty)));
                return apply_umot(b->inner, UMoT().lift(x.level));
            },
            [&](const term::Sub& x) -> ValuePtr {
                if (!x.annot)
                    throw CheckError(CheckErrorKind::SubstitutionMismatch,
                                     "explicit substitution without a codomain annotation");
                Ctx delta = check_stack(*x.annot);
                check_subst(ctx, x.subst, delta);
                TermPtr ty = rb_ty(delta.lengths(), infer(delta, x.body));
                return eval(ty, eval_subst(x.subst, ctx.env()));
            },
        },
        t->node);
}

void Checker::check(const Ctx& ctx, const TermPtr& t, const ValuePtr& expected) const {
    if (const auto* l = t->as<term::Lam>()) {
        const auto* p = expected->as<dom::Pi>();
        if (!p)
            throw CheckError(CheckErrorKind::NotAFunction,
                             "a function was given where " + debug_string(rb_ty(ctx.lengths(), expected)) +
                                 " is expected");
        ValuePtr x = ctx.next_var(p->dom);
        check(ctx.bind(p->dom), l->body, apply_closure(p->cod, x));
        return;
    }
    if (const auto* b = t->as<term::BoxIntro>()) {
        const auto* bt = expected->as<dom::BoxTy>();
        if (!bt)
            throw CheckError(CheckErrorKind::NotABox,
                             "a box was given where " + debug_string(rb_ty(ctx.lengths(), expected)) + " is expected");
        check(ctx.push_world(), b->body, bt->inner);
        return;
    }
    if (TermPtr floated = float_spine(t)) {
        const auto& a = *floated->as<term::App>();
        check(ctx.bind(infer(ctx, a.arg)), a.fn->as<term::Lam>()->body, expected);
        return;
    }
    ValuePtr actual = infer(ctx, t);
    if (!subtype(ctx, actual, expected)) {
        if (actual->is<dom::Univ>() && expected->is<dom::Univ>())
            throw CheckError(CheckErrorKind::UniverseMismatch,
                             "Ty " + std::to_string(actual->as<dom::Univ>()->level) + " does not fit in Ty " +
                                 std::to_string(expected->as<dom::Univ>()->level));
        TermPtr e = rb_ty(ctx.lengths(), expected);
        TermPtr g = rb_ty(ctx.lengths(), actual);
        throw CheckError(CheckErrorKind::ConversionFailure,
                         "expected " + debug_string(e) + " but got " + debug_string(g), e, g);
    }
}

bool Checker::convertible(const Ctx& ctx, const ValuePtr& a, const ValuePtr& b) const {
    NumberStack ns = ctx.lengths();
    return equal(rb_ty(ns, a), rb_ty(ns, b));
}

bool Checker::subtype(const Ctx& ctx, const ValuePtr& actual, const ValuePtr& expected) const {
    const auto* ua = actual->as<dom::Univ>();
    const auto* ub = expected->as<dom::Univ>();
    if (ua && ub) return ua->level <= ub->level;
    return convertible(ctx, actual, expected);
}

namespace {
CheckError mismatch(const std::string& msg) { return CheckError(CheckErrorKind::SubstitutionMismatch, msg); }

bool mentions_variables(const TermPtr& t) {
    return std::visit(overloaded{
                          [](const term::Var&) { return true; },
                          [](const term::Succ& x) { return mentions_variables(x.pred); },
                          [](const term::NatElim& x) {
                              return mentions_variables(x.motive) || mentions_variables(x.base) ||
                                     mentions_variables(x.step) || mentions_variables(x.scrutinee);
                          },
                          [](const term::Pi& x) { return mentions_variables(x.dom) || mentions_variables(x.cod); },
                          [](const term::Lam& x) { return mentions_variables(x.body); },
                          [](const term::App& x) { return mentions_variables(x.fn) || mentions_variables(x.arg); },
                          [](const term::BoxTy& x) { return mentions_variables(x.inner); },
                          [](const term::BoxIntro& x) { return mentions_variables(x.body); },
                          [](const term::Unbox& x) { return mentions_variables(x.body); },
                          [](const term::Sub&) { return true; },
                          [](const auto&) { return false; },
                      },
                      t->node);
}
}  // namespace

Ctx Checker::subst_codomain(const Ctx& gamma, const SubstPtr& s) const {
    return std::visit(overloaded{
                          [&](const subst::Id&) { return gamma; },
                          [&](const subst::Wk&) {
                              if (gamma.top_size() == 0) throw mismatch("weakening an empty world");
                              return gamma.pop();
                          },
                          [&](const subst::Ext& x) -> Ctx {
                              // Only a closed type is known to be the same on both sides of the base.
                              Ctx rest = subst_codomain(gamma, x.base);
                              TermPtr ty;
                              try {
                                  ty = rb_ty(gamma.lengths(), infer(gamma, x.term));
                              } catch (const CheckError&) {
                              }
                              if (!ty || mentions_variables(ty))
                                  throw mismatch("the intermediate stack of a composition whose inner part is an "
                                                 "extension cannot be inferred");
                              return rest.bind(eval(ty, Envs()));
                          },
                          [&](const subst::ModalExt& x) {
                              require_level(x.offset, "modal extension");
                              if (x.offset >= gamma.depth())
                                  throw mismatch("modal offset " + std::to_string(x.offset) +
                                                 " reaches past the domain stack");
                              return subst_codomain(gamma.truncate(x.offset), x.base).push_world();
                          },
                          [&](const subst::Comp& x) { return subst_codomain(subst_codomain(gamma, x.inner), x.outer); },
                      },
                      s->node);
}

void Checker::check_subst(const Ctx& gamma, const SubstPtr& s, const Ctx& delta) const {
    std::visit(overloaded{
                   [&](const subst::Id&) {
                       if (!equal(gamma.stack(), delta.stack())) throw mismatch("identity between different stacks");
                   },
                   [&](const subst::Wk&) {
                       if (gamma.top_size() == 0) throw mismatch("weakening an empty world");
                       if (!equal(gamma.pop().stack(), delta.stack()))
                           throw mismatch("weakening does not produce the codomain stack");
                   },
                   [&](const subst::Ext& x) {
                       if (delta.top_size() == 0) throw mismatch("extension into an empty world");
                       Ctx rest = delta.pop();
                       check_subst(gamma, x.base, rest);
                       const TermPtr& ty = delta.stack().top().back();
                       check(gamma, x.term, eval(ty, eval_subst(x.base, gamma.env())));
                   },
                   [&](const subst::ModalExt& x) {
                       require_level(x.offset, "modal extension");
                       if (delta.depth() < 2 || delta.top_size() != 0)
                           throw mismatch("modal extension needs an empty topmost codomain world");
                       if (x.offset >= gamma.depth())
                           throw mismatch("modal offset " + std::to_string(x.offset) + " reaches past the domain stack");
                       check_subst(gamma.truncate(x.offset), x.base, delta.truncate(1));
                   },
                   [&](const subst::Comp& x) { check_subst(subst_codomain(gamma, x.inner), x.outer, delta); },
               },
               s->node);
}

void Checker::check_typed(const CtxStack& stack, const TermPtr& t, const TermPtr& type) const {
    Ctx ctx = check_stack(stack);
    check_type(ctx, type);
    check(ctx, t, eval(type, ctx.env()));
}

}  // namespace mint
