#include "mint/eval.hpp"

namespace mint {

std::string_view eval_error_name(EvalErrorKind k) {
    switch (k) {
        case EvalErrorKind::StuckApplication: return "stuck-application";
        case EvalErrorKind::StuckUnbox: return "stuck-unbox";
        case EvalErrorKind::StuckRec: return "stuck-rec";
        case EvalErrorKind::UnboundVariable: return "unbound-variable";
        case EvalErrorKind::FuelExhausted: return "fuel-exhausted";
    }
    return "?";
}

ValuePtr eval(const TermPtr& t, const Envs& env, Fuel& fuel) {
    return std::visit(
        overloaded{
            [&](const term::Var& x) -> ValuePtr {
                ValuePtr v = env.lookup(x.index);
                if (!v) throw EvalError(EvalErrorKind::UnboundVariable, "#" + std::to_string(x.index));
                return v;
            },
            [&](const term::Univ& x) -> ValuePtr { return d_univ(x.level); },
            [&](const term::NatTy&) -> ValuePtr { return d_nat(); },
            [&](const term::Zero&) -> ValuePtr { return d_zero(); },
            [&](const term::Succ& x) -> ValuePtr { return d_succ(eval(x.pred, env, fuel)); },
            [&](const term::NatElim& x) -> ValuePtr {
                return do_rec(x.motive, eval(x.base, env, fuel), x.step, eval(x.scrutinee, env, fuel), env, fuel);
            },
            [&](const term::Pi& x) -> ValuePtr { return d_pi(eval(x.dom, env, fuel), Closure{x.cod, env}); },
            [&](const term::Lam& x) -> ValuePtr { return d_lam(Closure{x.body, env}); },
            [&](const term::App& x) -> ValuePtr {
                return do_app(eval(x.fn, env, fuel), eval(x.arg, env, fuel), fuel);
            },
            [&](const term::BoxTy& x) -> ValuePtr { return d_box_ty(eval(x.inner, env.ext(1), fuel)); },
            [&](const term::BoxIntro& x) -> ValuePtr { return d_box(eval(x.body, env.ext(1), fuel)); },
            [&](const term::Unbox& x) -> ValuePtr {
                return do_unbox(env.offset(x.level), eval(x.body, env.trunc(x.level), fuel), fuel);
            },
            [&](const term::Sub& x) -> ValuePtr { return eval(x.body, eval_subst(x.subst, env, fuel), fuel); },
        },
        t->node);
}

Envs eval_subst(const SubstPtr& s, const Envs& env, Fuel& fuel) {
    return std::visit(overloaded{
                          [&](const subst::Id&) { return env; },
                          [&](const subst::Wk&) { return env.drop(); },
                          [&](const subst::Ext& x) {
                              return eval_subst(x.base, env, fuel).bind(eval(x.term, env, fuel));
                          },
                          [&](const subst::ModalExt& x) {
                              return eval_subst(x.base, env.trunc(x.offset), fuel).ext(env.offset(x.offset));
                          },
                          [&](const subst::Comp& x) {
                              return eval_subst(x.outer, eval_subst(x.inner, env, fuel), fuel);
                          },
                      },
                      s->node);
}

ValuePtr do_unbox(std::size_t k, const ValuePtr& a, Fuel& fuel) {
    fuel.burn();
    if (const auto* b = a->as<dom::Box>()) return apply_umot(b->body, UMoT().lift(k));
    if (const auto* r = a->as<dom::Reflect>()) {
        if (const auto* bt = r->type->as<dom::BoxTy>())
            return d_reflect(apply_umot(bt->inner, UMoT().lift(k)), n_unbox(k, r->ne));
    }
    throw EvalError(EvalErrorKind::StuckUnbox, debug_string(a));
}

ValuePtr apply_closure(const Closure& c, const ValuePtr& a, Fuel& fuel) { return eval(c.body, c.env.bind(a), fuel); }

ValuePtr do_app(const ValuePtr& f, const ValuePtr& a, Fuel& fuel) {
    fuel.burn();
    if (const auto* l = f->as<dom::Lam>()) return apply_closure(l->body, a, fuel);
    if (const auto* r = f->as<dom::Reflect>()) {
        if (const auto* p = r->type->as<dom::Pi>())
            return d_reflect(apply_closure(p->cod, a, fuel), n_app(r->ne, Normal{p->dom, a}));
    }
    throw EvalError(EvalErrorKind::StuckApplication, debug_string(f));
}

ValuePtr do_rec(const TermPtr& motive, const ValuePtr& base, const TermPtr& step, const ValuePtr& scrutinee,
                const Envs& env, Fuel& fuel) {
    fuel.burn();
    if (scrutinee->is<dom::Zero>()) return base;
    if (const auto* s = scrutinee->as<dom::Succ>()) {
        ValuePtr rec = do_rec(motive, base, step, s->pred, env, fuel);
        return eval(step, env.bind(s->pred).bind(rec), fuel);
    }
    if (const auto* r = scrutinee->as<dom::Reflect>()) {
        return d_reflect(eval(motive, env.bind(scrutinee), fuel), n_rec(motive, base, step, r->ne, env));
    }
    throw EvalError(EvalErrorKind::StuckRec, debug_string(scrutinee));
}

ValuePtr eval(const TermPtr& t, const Envs& env) {
    Fuel f;
    return eval(t, env, f);
}
Envs eval_subst(const SubstPtr& s, const Envs& env) {
    Fuel f;
    return eval_subst(s, env, f);
}
ValuePtr do_unbox(std::size_t k, const ValuePtr& a) {
    Fuel f;
    return do_unbox(k, a, f);
}
ValuePtr do_app(const ValuePtr& fn, const ValuePtr& a) {
    Fuel f;
    return do_app(fn, a, f);
}
ValuePtr do_rec(const TermPtr& motive, const ValuePtr& base, const TermPtr& step, const ValuePtr& scrutinee,
                const Envs& env) {
    Fuel f;
    return do_rec(motive, base, step, scrutinee, env, f);
}
ValuePtr apply_closure(const Closure& c, const ValuePtr& a) {
    Fuel f;
    return apply_closure(c, a, f);
}

}  // namespace mint
