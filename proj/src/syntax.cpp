#include "mint/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mint {

bool allows(Flavor flavor, std::size_t level) {
    switch (flavor) {
        case Flavor::K: return level == 1;
        case Flavor::T: return level <= 1;
        case Flavor::K4: return level >= 1;
        case Flavor::S4: return true;
    }
    return false;
}

std::string_view flavor_name(Flavor flavor) {
    switch (flavor) {
        case Flavor::K: return "k";
        case Flavor::T: return "t";
        case Flavor::K4: return "k4";
        case Flavor::S4: return "s4";
    }
    return "?";
}

std::optional<Flavor> parse_flavor(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "k") return Flavor::K;
    if (lower == "t") return Flavor::T;
    if (lower == "k4") return Flavor::K4;
    if (lower == "s4") return Flavor::S4;
    return std::nullopt;
}

CtxStack CtxStack::push_world() const {
    CtxStack r = *this;
    r.worlds.emplace_back();
    return r;
}

CtxStack CtxStack::bind(TermPtr type) const {
    CtxStack r = *this;
    r.worlds.back().push_back(std::move(type));
    return r;
}

CtxStack stack_truncate(const CtxStack& stack, std::size_t n) {
    if (n >= stack.worlds.size()) {
        throw StackError("cannot truncate " + std::to_string(n) + " worlds from a stack of depth " +
                         std::to_string(stack.worlds.size()));
    }
    CtxStack r;
    r.worlds.assign(stack.worlds.begin(), stack.worlds.end() - static_cast<std::ptrdiff_t>(n));
    return r;
}

std::vector<std::size_t> world_lengths(const CtxStack& stack) {
    std::vector<std::size_t> r;
    r.reserve(stack.worlds.size());
    for (const auto& w : stack.worlds) r.push_back(w.size());
    return r;
}

namespace {
template <class N>
TermPtr make(N n) {
    return std::make_shared<const Term>(Term{std::move(n)});
}
template <class N>
SubstPtr make_subst(N n) {
    return std::make_shared<const Subst>(Subst{std::move(n)});
}
}  // namespace

TermPtr var(std::size_t index) { return make(term::Var{index}); }
TermPtr univ(std::size_t level) { return make(term::Univ{level}); }
TermPtr nat() {
    static const TermPtr t = make(term::NatTy{});
    return t;
}
TermPtr zero() {
    static const TermPtr t = make(term::Zero{});
    return t;
}
TermPtr succ(TermPtr t) { return make(term::Succ{std::move(t)}); }
TermPtr nat_elim(TermPtr motive, TermPtr base, TermPtr step, TermPtr scrutinee) {
    return make(term::NatElim{std::move(motive), std::move(base), std::move(step), std::move(scrutinee)});
}
TermPtr pi(TermPtr dom, TermPtr cod) { return make(term::Pi{std::move(dom), std::move(cod)}); }
TermPtr arrow(TermPtr dom, TermPtr cod) { return pi(std::move(dom), shift(cod, 1)); }
TermPtr lam(TermPtr body) { return make(term::Lam{std::move(body)}); }
TermPtr app(TermPtr fn, TermPtr arg) { return make(term::App{std::move(fn), std::move(arg)}); }
TermPtr box_ty(TermPtr inner) { return make(term::BoxTy{std::move(inner)}); }
TermPtr box(TermPtr body) { return make(term::BoxIntro{std::move(body)}); }
TermPtr unbox(std::size_t level, TermPtr body) { return make(term::Unbox{level, std::move(body)}); }
TermPtr sub(TermPtr body, SubstPtr s, std::optional<CtxStack> annot) {
    std::shared_ptr<const CtxStack> a;
    if (annot) a = std::make_shared<const CtxStack>(std::move(*annot));
    return make(term::Sub{std::move(body), std::move(s), std::move(a)});
}
TermPtr numeral(std::size_t n) {
    TermPtr t = zero();
    for (std::size_t i = 0; i < n; ++i) t = succ(t);
    return t;
}

SubstPtr id_subst() {
    static const SubstPtr s = make_subst(subst::Id{});
    return s;
}
SubstPtr wk() {
    static const SubstPtr s = make_subst(subst::Wk{});
    return s;
}
SubstPtr ext(SubstPtr base, TermPtr t) { return make_subst(subst::Ext{std::move(base), std::move(t)}); }
SubstPtr modal_ext(SubstPtr base, std::size_t offset) {
    return make_subst(subst::ModalExt{std::move(base), offset});
}
SubstPtr comp(SubstPtr outer, SubstPtr inner) {
    return make_subst(subst::Comp{std::move(outer), std::move(inner)});
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->node.index() != b->node.index()) return false;
    return std::visit(
        overloaded{
            [&](const term::Var& x) { return x.index == b->as<term::Var>()->index; },
            [&](const term::Univ& x) { return x.level == b->as<term::Univ>()->level; },
            [&](const term::NatTy&) { return true; },
            [&](const term::Zero&) { return true; },
            [&](const term::Succ& x) { return equal(x.pred, b->as<term::Succ>()->pred); },
            [&](const term::NatElim& x) {
                const auto& y = *b->as<term::NatElim>();
                return equal(x.motive, y.motive) && equal(x.base, y.base) && equal(x.step, y.step) &&
                       equal(x.scrutinee, y.scrutinee);
            },
            [&](const term::Pi& x) {
                const auto& y = *b->as<term::Pi>();
                return equal(x.dom, y.dom) && equal(x.cod, y.cod);
            },
            [&](const term::Lam& x) { return equal(x.body, b->as<term::Lam>()->body); },
            [&](const term::App& x) {
                const auto& y = *b->as<term::App>();
                return equal(x.fn, y.fn) && equal(x.arg, y.arg);
            },
            [&](const term::BoxTy& x) { return equal(x.inner, b->as<term::BoxTy>()->inner); },
            [&](const term::BoxIntro& x) { return equal(x.body, b->as<term::BoxIntro>()->body); },
            [&](const term::Unbox& x) {
                const auto& y = *b->as<term::Unbox>();
                return x.level == y.level && equal(x.body, y.body);
            },
            [&](const term::Sub& x) {
                const auto& y = *b->as<term::Sub>();
                return equal(x.body, y.body) && equal(x.subst, y.subst);
            },
        },
        a->node);
}

bool equal(const SubstPtr& a, const SubstPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->node.index() != b->node.index()) return false;
    return std::visit(overloaded{
                          [&](const subst::Id&) { return true; },
                          [&](const subst::Wk&) { return true; },
                          [&](const subst::Ext& x) {
                              const auto& y = *b->as<subst::Ext>();
                              return equal(x.base, y.base) && equal(x.term, y.term);
                          },
                          [&](const subst::ModalExt& x) {
                              const auto& y = *b->as<subst::ModalExt>();
                              return x.offset == y.offset && equal(x.base, y.base);
                          },
                          [&](const subst::Comp& x) {
                              const auto& y = *b->as<subst::Comp>();
                              return equal(x.outer, y.outer) && equal(x.inner, y.inner);
                          },
                      },
                      a->node);
}

bool equal(const CtxStack& a, const CtxStack& b) {
    if (a.worlds.size() != b.worlds.size()) return false;
    for (std::size_t i = 0; i < a.worlds.size(); ++i) {
        if (a.worlds[i].size() != b.worlds[i].size()) return false;
        for (std::size_t j = 0; j < a.worlds[i].size(); ++j)
            if (!equal(a.worlds[i][j], b.worlds[i][j])) return false;
    }
    return true;
}

namespace {

bool subst_contains_sub(const SubstPtr& s);

bool any_child(const TermPtr& t, bool (*pred)(const TermPtr&)) {
    return std::visit(overloaded{
                          [&](const term::Succ& x) { return pred(x.pred); },
                          [&](const term::NatElim& x) {
                              return pred(x.motive) || pred(x.base) || pred(x.step) || pred(x.scrutinee);
                          },
                          [&](const term::Pi& x) { return pred(x.dom) || pred(x.cod); },
                          [&](const term::Lam& x) { return pred(x.body); },
                          [&](const term::App& x) { return pred(x.fn) || pred(x.arg); },
                          [&](const term::BoxTy& x) { return pred(x.inner); },
                          [&](const term::BoxIntro& x) { return pred(x.body); },
                          [&](const term::Unbox& x) { return pred(x.body); },
                          [&](const term::Sub& x) { return pred(x.body); },
                          [&](const auto&) { return false; },
                      },
                      t->node);
}

bool subst_contains_sub(const SubstPtr& s) {
    return std::visit(overloaded{
                          [&](const subst::Ext& x) { return subst_contains_sub(x.base) || contains_sub(x.term); },
                          [&](const subst::ModalExt& x) { return subst_contains_sub(x.base); },
                          [&](const subst::Comp& x) {
                              return subst_contains_sub(x.outer) || subst_contains_sub(x.inner);
                          },
                          [&](const auto&) { return false; },
                      },
                      s->node);
}

// World-aware traversal state for shift/occurs: one entry per world between
// the starting world and the current one. A value is the binder cutoff in a
// world that is the starting world; nullopt marks any other world.
using WorldCutoffs = std::vector<std::optional<std::size_t>>;

WorldCutoffs enter_binders(WorldCutoffs w, std::size_t n) {
    if (w.back()) *w.back() += n;
    return w;
}
WorldCutoffs enter_box(WorldCutoffs w) {
    w.emplace_back(std::nullopt);
    return w;
}
WorldCutoffs enter_unbox(WorldCutoffs w, std::size_t n) {
    if (n < w.size()) {
        w.resize(w.size() - n);
        return w;
    }
    return WorldCutoffs{std::nullopt};
}

TermPtr shift_rec(const TermPtr& t, std::size_t amount, const WorldCutoffs& w) {
    return std::visit(
        overloaded{
            [&](const term::Var& x) -> TermPtr {
                if (w.back() && x.index >= *w.back()) return var(x.index + amount);
                return t;
            },
            [&](const term::Univ&) -> TermPtr { return t; },
            [&](const term::NatTy&) -> TermPtr { return t; },
            [&](const term::Zero&) -> TermPtr { return t; },
            [&](const term::Succ& x) -> TermPtr { return succ(shift_rec(x.pred, amount, w)); },
            [&](const term::NatElim& x) -> TermPtr {
                return nat_elim(shift_rec(x.motive, amount, enter_binders(w, 1)), shift_rec(x.base, amount, w),
                                shift_rec(x.step, amount, enter_binders(w, 2)),
                                shift_rec(x.scrutinee, amount, w));
            },
            [&](const term::Pi& x) -> TermPtr {
                return pi(shift_rec(x.dom, amount, w), shift_rec(x.cod, amount, enter_binders(w, 1)));
            },
            [&](const term::Lam& x) -> TermPtr { return lam(shift_rec(x.body, amount, enter_binders(w, 1))); },
            [&](const term::App& x) -> TermPtr {
                return app(shift_rec(x.fn, amount, w), shift_rec(x.arg, amount, w));
            },
            [&](const term::BoxTy& x) -> TermPtr { return box_ty(shift_rec(x.inner, amount, enter_box(w))); },
            [&](const term::BoxIntro& x) -> TermPtr { return box(shift_rec(x.body, amount, enter_box(w))); },
            [&](const term::Unbox& x) -> TermPtr {
                return unbox(x.level, shift_rec(x.body, amount, enter_unbox(w, x.level)));
            },
            [&](const term::Sub&) -> TermPtr { throw Error("shift: explicit substitutions are not supported"); },
        },
        t->node);
}

bool occurs_rec(const TermPtr& t, std::size_t index, const WorldCutoffs& w) {
    return std::visit(
        overloaded{
            [&](const term::Var& x) { return w.back() && x.index == index + *w.back(); },
            [&](const term::Succ& x) { return occurs_rec(x.pred, index, w); },
            [&](const term::NatElim& x) {
                return occurs_rec(x.motive, index, enter_binders(w, 1)) || occurs_rec(x.base, index, w) ||
                       occurs_rec(x.step, index, enter_binders(w, 2)) || occurs_rec(x.scrutinee, index, w);
            },
            [&](const term::Pi& x) {
                return occurs_rec(x.dom, index, w) || occurs_rec(x.cod, index, enter_binders(w, 1));
            },
            [&](const term::Lam& x) { return occurs_rec(x.body, index, enter_binders(w, 1)); },
            [&](const term::App& x) { return occurs_rec(x.fn, index, w) || occurs_rec(x.arg, index, w); },
            [&](const term::BoxTy& x) { return occurs_rec(x.inner, index, enter_box(w)); },
            [&](const term::BoxIntro& x) { return occurs_rec(x.body, index, enter_box(w)); },
            [&](const term::Unbox& x) { return occurs_rec(x.body, index, enter_unbox(w, x.level)); },
            [&](const term::Sub&) -> bool { throw Error("occurs: explicit substitutions are not supported"); },
            [&](const auto&) { return false; },
        },
        t->node);
}

bool is_ne(const TermPtr& t);

bool is_nf(const TermPtr& t) {
    if (is_ne(t)) return true;
    return std::visit(overloaded{
                          [](const term::NatTy&) { return true; },
                          [](const term::Univ&) { return true; },
                          [](const term::Zero&) { return true; },
                          [](const term::BoxTy& x) { return is_nf(x.inner); },
                          [](const term::Pi& x) { return is_nf(x.dom) && is_nf(x.cod); },
                          [](const term::Succ& x) { return is_nf(x.pred); },
                          [](const term::BoxIntro& x) { return is_nf(x.body); },
                          [](const term::Lam& x) { return is_nf(x.body); },
                          [](const auto&) { return false; },
                      },
                      t->node);
}

bool is_ne(const TermPtr& t) {
    return std::visit(overloaded{
                          [](const term::Var&) { return true; },
                          [](const term::App& x) { return is_ne(x.fn) && is_nf(x.arg); },
                          [](const term::Unbox& x) { return is_ne(x.body); },
                          [](const term::NatElim& x) {
                              return is_nf(x.motive) && is_nf(x.base) && is_nf(x.step) && is_ne(x.scrutinee);
                          },
                          [](const auto&) { return false; },
                      },
                      t->node);
}

}  // namespace

bool contains_sub(const TermPtr& t) {
    if (const auto* s = t->as<term::Sub>()) {
        (void)s;
        return true;
    }
    return any_child(t, &contains_sub);
}

std::size_t term_depth(const TermPtr& t) {
    std::size_t d = 0;
    auto up = [&](const TermPtr& c) { d = std::max(d, term_depth(c)); };
    std::visit(overloaded{
                   [&](const term::Succ& x) { up(x.pred); },
                   [&](const term::NatElim& x) {
                       up(x.motive);
                       up(x.base);
                       up(x.step);
                       up(x.scrutinee);
                   },
                   [&](const term::Pi& x) {
                       up(x.dom);
                       up(x.cod);
                   },
                   [&](const term::Lam& x) { up(x.body); },
                   [&](const term::App& x) {
                       up(x.fn);
                       up(x.arg);
                   },
                   [&](const term::BoxTy& x) { up(x.inner); },
                   [&](const term::BoxIntro& x) { up(x.body); },
                   [&](const term::Unbox& x) { up(x.body); },
                   [&](const term::Sub& x) { up(x.body); },
                   [&](const auto&) {},
               },
               t->node);
    return d + 1;
}

std::size_t term_size(const TermPtr& t) {
    std::size_t n = 1;
    auto add = [&](const TermPtr& c) { n += term_size(c); };
    std::visit(overloaded{
                   [&](const term::Succ& x) { add(x.pred); },
                   [&](const term::NatElim& x) {
                       add(x.motive);
                       add(x.base);
                       add(x.step);
                       add(x.scrutinee);
                   },
                   [&](const term::Pi& x) {
                       add(x.dom);
                       add(x.cod);
                   },
                   [&](const term::Lam& x) { add(x.body); },
                   [&](const term::App& x) {
                       add(x.fn);
                       add(x.arg);
                   },
                   [&](const term::BoxTy& x) { add(x.inner); },
                   [&](const term::BoxIntro& x) { add(x.body); },
                   [&](const term::Unbox& x) { add(x.body); },
                   [&](const term::Sub& x) { add(x.body); },
                   [&](const auto&) {},
               },
               t->node);
    return n;
}

TermPtr shift(const TermPtr& t, std::size_t amount, std::size_t cutoff) {
    if (amount == 0) return t;
    return shift_rec(t, amount, WorldCutoffs{cutoff});
}

bool occurs(const TermPtr& t, std::size_t index) { return occurs_rec(t, index, WorldCutoffs{std::size_t{0}}); }

std::string_view nf_class_name(NfClass c) {
    switch (c) {
        case NfClass::Nf: return "Nf";
        case NfClass::Ne: return "Ne";
        case NfClass::Neither: return "neither";
    }
    return "?";
}

NfClass classify_nf(const TermPtr& t) {
    if (is_ne(t)) return NfClass::Ne;
    if (is_nf(t)) return NfClass::Nf;
    return NfClass::Neither;
}

namespace {
void debug_rec(std::ostream& os, const TermPtr& t);

void debug_subst(std::ostream& os, const SubstPtr& s) {
    std::visit(overloaded{
                   [&](const subst::Id&) { os << "I"; },
                   [&](const subst::Wk&) { os << "wk"; },
                   [&](const subst::Ext& x) {
                       os << "(";
                       debug_subst(os, x.base);
                       os << ", ";
                       debug_rec(os, x.term);
                       os << ")";
                   },
                   [&](const subst::ModalExt& x) {
                       os << "^" << x.offset << "(";
                       debug_subst(os, x.base);
                       os << ")";
                   },
                   [&](const subst::Comp& x) {
                       os << "(";
                       debug_subst(os, x.outer);
                       os << " o ";
                       debug_subst(os, x.inner);
                       os << ")";
                   },
               },
               s->node);
}

void debug_rec(std::ostream& os, const TermPtr& t) {
    std::visit(overloaded{
                   [&](const term::Var& x) { os << "#" << x.index; },
                   [&](const term::Univ& x) { os << "Ty" << x.level; },
                   [&](const term::NatTy&) { os << "Nat"; },
                   [&](const term::Zero&) { os << "zero"; },
                   [&](const term::Succ& x) {
                       os << "(succ ";
                       debug_rec(os, x.pred);
                       os << ")";
                   },
                   [&](const term::NatElim& x) {
                       os << "(rec ";
                       debug_rec(os, x.motive);
                       os << " ";
                       debug_rec(os, x.base);
                       os << " ";
                       debug_rec(os, x.step);
                       os << " ";
                       debug_rec(os, x.scrutinee);
                       os << ")";
                   },
                   [&](const term::Pi& x) {
                       os << "(Pi ";
                       debug_rec(os, x.dom);
                       os << " ";
                       debug_rec(os, x.cod);
                       os << ")";
                   },
                   [&](const term::Lam& x) {
                       os << "(fn ";
                       debug_rec(os, x.body);
                       os << ")";
                   },
                   [&](const term::App& x) {
                       os << "(";
                       debug_rec(os, x.fn);
                       os << " ";
                       debug_rec(os, x.arg);
                       os << ")";
                   },
                   [&](const term::BoxTy& x) {
                       os << "([] ";
                       debug_rec(os, x.inner);
                       os << ")";
                   },
                   [&](const term::BoxIntro& x) {
                       os << "(box ";
                       debug_rec(os, x.body);
                       os << ")";
                   },
                   [&](const term::Unbox& x) {
                       os << "(unbox " << x.level << " ";
                       debug_rec(os, x.body);
                       os << ")";
                   },
                   [&](const term::Sub& x) {
                       debug_rec(os, x.body);
                       os << "[";
                       debug_subst(os, x.subst);
                       os << "]";
                   },
               },
               t->node);
}
}  // namespace

std::string debug_string(const TermPtr& t) {
    std::ostringstream os;
    debug_rec(os, t);
    return os.str();
}

std::string debug_string(const SubstPtr& s) {
    std::ostringstream os;
    debug_subst(os, s);
    return os.str();
}

}  // namespace mint
