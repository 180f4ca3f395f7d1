#include "mint/readback.hpp"

namespace mint {

namespace {
NumberStack bump(NumberStack ns, std::size_t by) {
    ns.back() += by;
    return ns;
}
NumberStack push0(NumberStack ns) {
    ns.push_back(0);
    return ns;
}
ValuePtr fresh(const ValuePtr& type, std::size_t level) { return d_reflect(type, n_var(level)); }
}  // namespace

TermPtr rb_nf(const NumberStack& ns, const Normal& d, ReadbackState& st) {
    const ValuePtr& a = d.value;
    return std::visit(
        overloaded{
            [&](const dom::Univ&) -> TermPtr { return rb_ty(ns, a, st); },
            [&](const dom::Nat&) -> TermPtr {
                if (a->is<dom::Zero>()) return zero();
                if (const auto* s = a->as<dom::Succ>()) return succ(rb_nf(ns, Normal{d.type, s->pred}, st));
                if (const auto* r = a->as<dom::Reflect>()) return rb_ne(ns, r->ne, st);
                throw ReadbackError("value " + debug_string(a) + " read back at Nat");
            },
            [&](const dom::BoxTy& x) -> TermPtr {
                return box(rb_nf(push0(ns), Normal{x.inner, do_unbox(1, a, st.fuel)}, st));
            },
            [&](const dom::Pi& x) -> TermPtr {
                ValuePtr v = fresh(x.dom, ns.back());
                ValuePtr body_ty = apply_closure(x.cod, v, st.fuel);
                return lam(rb_nf(bump(ns, 1), Normal{body_ty, do_app(a, v, st.fuel)}, st));
            },
            [&](const dom::Reflect&) -> TermPtr {
                if (const auto* r = a->as<dom::Reflect>()) return rb_ne(ns, r->ne, st);
                throw ReadbackError("value " + debug_string(a) + " read back at a neutral type");
            },
            [&](const auto&) -> TermPtr {
                throw ReadbackError("value " + debug_string(a) + " read back at non-type " + debug_string(d.type));
            },
        },
        d.type->node);
}

TermPtr rb_ty(const NumberStack& ns, const ValuePtr& a, ReadbackState& st) {
    return std::visit(overloaded{
                          [&](const dom::Univ& x) -> TermPtr { return univ(x.level); },
                          [&](const dom::Nat&) -> TermPtr { return nat(); },
                          [&](const dom::BoxTy& x) -> TermPtr { return box_ty(rb_ty(push0(ns), x.inner, st)); },
                          [&](const dom::Pi& x) -> TermPtr {
                              ValuePtr v = fresh(x.dom, ns.back());
                              return pi(rb_ty(ns, x.dom, st), rb_ty(bump(ns, 1), apply_closure(x.cod, v, st.fuel), st));
                          },
                          [&](const dom::Reflect& x) -> TermPtr { return rb_ne(ns, x.ne, st); },
                          [&](const auto&) -> TermPtr {
                              throw ReadbackError("value " + debug_string(a) + " is not a type");
                          },
                      },
                      a->node);
}

TermPtr rb_ne(const NumberStack& ns, const NeutralPtr& c, ReadbackState& st) {
    return std::visit(
        overloaded{
            [&](const ne::Var& x) -> TermPtr {
                std::size_t n = ns.back();
                if (x.level + 1 > n) {
                    ++st.clamps;
                    return var(0);
                }
                return var(n - x.level - 1);
            },
            [&](const ne::App& x) -> TermPtr { return app(rb_ne(ns, x.fn, st), rb_nf(ns, x.arg, st)); },
            [&](const ne::Unbox& x) -> TermPtr {
                if (x.level >= ns.size())
                    throw ReadbackError("number stack underflow reading unbox " + std::to_string(x.level));
                NumberStack lower(ns.begin(), ns.end() - static_cast<std::ptrdiff_t>(x.level));
                return unbox(x.level, rb_ne(lower, x.body, st));
            },
            [&](const ne::Rec& x) -> TermPtr {
                std::size_t z = ns.back();
                ValuePtr pred = fresh(d_nat(), z);
                ValuePtr motive_at_pred = eval(x.motive, x.env.bind(pred), st.fuel);
                TermPtr motive = rb_ty(bump(ns, 1), motive_at_pred, st);
                TermPtr base = rb_nf(ns, Normal{eval(x.motive, x.env.bind(d_zero()), st.fuel), x.base}, st);
                ValuePtr ih = fresh(motive_at_pred, z + 1);
                ValuePtr step_val = eval(x.step, x.env.bind(pred).bind(ih), st.fuel);
                ValuePtr step_ty = eval(x.motive, x.env.bind(d_succ(pred)), st.fuel);
                TermPtr step = rb_nf(bump(ns, 2), Normal{step_ty, step_val}, st);
                return nat_elim(motive, base, step, rb_ne(ns, x.scrutinee, st));
            },
        },
        c->node);
}

TermPtr rb_nf(const NumberStack& ns, const Normal& d) {
    ReadbackState st;
    return rb_nf(ns, d, st);
}
TermPtr rb_ne(const NumberStack& ns, const NeutralPtr& c) {
    ReadbackState st;
    return rb_ne(ns, c, st);
}
TermPtr rb_ty(const NumberStack& ns, const ValuePtr& a) {
    ReadbackState st;
    return rb_ty(ns, a, st);
}

Envs initial_env(const CtxStack& stack) {
    Envs env;
    for (std::size_t i = 0; i < stack.worlds.size(); ++i) {
        if (i > 0) env = env.ext(1);
        const auto& world = stack.worlds[i];
        for (std::size_t j = 0; j < world.size(); ++j) env = env.bind(fresh(eval(world[j], env), j));
    }
    return env;
}

TermPtr nbe(const CtxStack& stack, const TermPtr& t, const TermPtr& type, ReadbackState& st) {
    Envs env = initial_env(stack);
    ValuePtr ty = eval(type, env, st.fuel);
    ValuePtr v = eval(t, env, st.fuel);
    return rb_nf(world_lengths(stack), Normal{ty, v}, st);
}

TermPtr nbe(const CtxStack& stack, const TermPtr& t, const TermPtr& type) {
    ReadbackState st;
    return nbe(stack, t, type, st);
}

TermPtr nbe_type(const CtxStack& stack, const TermPtr& type) {
    ReadbackState st;
    return rb_ty(world_lengths(stack), eval(type, initial_env(stack), st.fuel), st);
}

}  // namespace mint
