#include "mint/domain.hpp"

#include <sstream>

namespace mint {

UMoT::UMoT(std::vector<std::size_t> offsets) : offsets_(std::move(offsets)) {
    while (!offsets_.empty() && offsets_.back() == 1) offsets_.pop_back();
}

UMoT UMoT::lift(std::size_t n) const {
    std::vector<std::size_t> r;
    r.reserve(offsets_.size() + 1);
    r.push_back(n);
    r.insert(r.end(), offsets_.begin(), offsets_.end());
    return UMoT(std::move(r));
}

std::size_t umot_offset(const UMoT& k, std::size_t n) {
    std::size_t sum = 0;
    const auto& o = k.offsets();
    for (std::size_t i = 0; i < n; ++i) sum += i < o.size() ? o[i] : 1;
    return sum;
}

UMoT umot_trunc(const UMoT& k, std::size_t n) {
    const auto& o = k.offsets();
    if (n >= o.size()) return UMoT();
    return UMoT(std::vector<std::size_t>(o.begin() + static_cast<std::ptrdiff_t>(n), o.end()));
}

UMoT umot_compose(const UMoT& k, const UMoT& k2) {
    std::vector<std::size_t> out;
    UMoT a = k;
    UMoT b = k2;
    while (!a.is_identity()) {
        std::size_t head = a.at(0);
        out.push_back(umot_offset(b, head));
        b = umot_trunc(b, head);
        a = umot_trunc(a, 1);
    }
    out.insert(out.end(), b.offsets().begin(), b.offsets().end());
    return UMoT(std::move(out));
}

std::string to_string(const UMoT& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k.offsets().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.offsets()[i]);
    }
    return s + "]";
}

std::size_t Envs::frame_offset(std::size_t i) const {
    const Frame* f = head_.get();
    for (; f && i > 0; --i) f = f->next.get();
    return f ? f->offset : 1;
}

LocalsPtr Envs::frame_locals(std::size_t i) const {
    const Frame* f = head_.get();
    for (; f && i > 0; --i) f = f->next.get();
    return f ? f->locals : nullptr;
}

std::size_t Envs::stored_frames() const {
    std::size_t n = 0;
    for (const Frame* f = head_.get(); f; f = f->next.get()) ++n;
    return n;
}

ValuePtr Envs::lookup(std::size_t index) const {
    if (!head_) return nullptr;
    const Locals* l = head_->locals.get();
    for (; l && index > 0; --index) l = l->tail.get();
    return l ? l->head : nullptr;
}

std::size_t Envs::top_size() const { return head_ && head_->locals ? head_->locals->size : 0; }

Envs Envs::ext(std::size_t offset) const {
    return from_head(std::make_shared<const Frame>(Frame{offset, nullptr, head_}));
}

Envs Envs::bind(ValuePtr v) const {
    std::size_t off = head_ ? head_->offset : 1;
    LocalsPtr old = head_ ? head_->locals : nullptr;
    FramePtr next = head_ ? head_->next : nullptr;
    std::size_t size = old ? old->size + 1 : 1;
    auto locals = std::make_shared<const Locals>(Locals{std::move(v), old, size});
    return from_head(std::make_shared<const Frame>(Frame{off, std::move(locals), std::move(next)}));
}

Envs Envs::drop() const {
    if (!head_ || !head_->locals) throw EnvError("drop from an environment with no local bindings");
    return from_head(std::make_shared<const Frame>(Frame{head_->offset, head_->locals->tail, head_->next}));
}

Envs Envs::trunc(std::size_t n) const {
    const FramePtr* f = &head_;
    for (; *f && n > 0; --n) f = &(*f)->next;
    return from_head(*f);
}

std::size_t Envs::offset(std::size_t n) const {
    std::size_t sum = 0;
    const Frame* f = head_.get();
    for (; n > 0; --n) {
        sum += f ? f->offset : 1;
        if (f) f = f->next.get();
    }
    return sum;
}

namespace {
template <class N>
ValuePtr mk(N n) {
    return std::make_shared<const Value>(Value{std::move(n)});
}
template <class N>
NeutralPtr mkn(N n) {
    return std::make_shared<const Neutral>(Neutral{std::move(n)});
}
}  // namespace

ValuePtr d_nat() {
    static const ValuePtr v = mk(dom::Nat{});
    return v;
}
ValuePtr d_univ(std::size_t level) { return mk(dom::Univ{level}); }
ValuePtr d_box_ty(ValuePtr inner) { return mk(dom::BoxTy{std::move(inner)}); }
ValuePtr d_pi(ValuePtr d, Closure cod) { return mk(dom::Pi{std::move(d), std::move(cod)}); }
ValuePtr d_zero() {
    static const ValuePtr v = mk(dom::Zero{});
    return v;
}
ValuePtr d_succ(ValuePtr pred) { return mk(dom::Succ{std::move(pred)}); }
ValuePtr d_box(ValuePtr body) { return mk(dom::Box{std::move(body)}); }
ValuePtr d_lam(Closure body) { return mk(dom::Lam{std::move(body)}); }
ValuePtr d_reflect(ValuePtr type, NeutralPtr c) { return mk(dom::Reflect{std::move(type), std::move(c)}); }
NeutralPtr n_var(std::size_t level) { return mkn(ne::Var{level}); }
NeutralPtr n_app(NeutralPtr fn, Normal arg) { return mkn(ne::App{std::move(fn), std::move(arg)}); }
NeutralPtr n_unbox(std::size_t level, NeutralPtr body) { return mkn(ne::Unbox{level, std::move(body)}); }
NeutralPtr n_rec(TermPtr motive, ValuePtr base, TermPtr step, NeutralPtr scrutinee, Envs env) {
    return mkn(ne::Rec{std::move(motive), std::move(base), std::move(step), std::move(scrutinee), std::move(env)});
}

ValuePtr apply_umot(const ValuePtr& a, const UMoT& k) {
    if (k.is_identity()) return a;
    return std::visit(overloaded{
                          [&](const dom::Nat&) { return a; },
                          [&](const dom::Univ&) { return a; },
                          [&](const dom::Zero&) { return a; },
                          [&](const dom::BoxTy& x) { return d_box_ty(apply_umot(x.inner, k.lift(1))); },
                          [&](const dom::Pi& x) { return d_pi(apply_umot(x.dom, k), apply_umot(x.cod, k)); },
                          [&](const dom::Succ& x) { return d_succ(apply_umot(x.pred, k)); },
                          [&](const dom::Box& x) { return d_box(apply_umot(x.body, k.lift(1))); },
                          [&](const dom::Lam& x) { return d_lam(apply_umot(x.body, k)); },
                          [&](const dom::Reflect& x) {
                              return d_reflect(apply_umot(x.type, k), apply_umot(x.ne, k));
                          },
                      },
                      a->node);
}

NeutralPtr apply_umot(const NeutralPtr& c, const UMoT& k) {
    if (k.is_identity()) return c;
    return std::visit(overloaded{
                          [&](const ne::Var&) { return c; },
                          [&](const ne::App& x) { return n_app(apply_umot(x.fn, k), apply_umot(x.arg, k)); },
                          [&](const ne::Unbox& x) {
                              return n_unbox(umot_offset(k, x.level), apply_umot(x.body, umot_trunc(k, x.level)));
                          },
                          [&](const ne::Rec& x) {
                              return n_rec(x.motive, apply_umot(x.base, k), x.step, apply_umot(x.scrutinee, k),
                                           apply_umot(x.env, k));
                          },
                      },
                      c->node);
}

Normal apply_umot(const Normal& d, const UMoT& k) { return Normal{apply_umot(d.type, k), apply_umot(d.value, k)}; }

Closure apply_umot(const Closure& c, const UMoT& k) { return Closure{c.body, apply_umot(c.env, k)}; }

namespace {
LocalsPtr map_locals(const LocalsPtr& l, const UMoT& k) {
    if (!l) return nullptr;
    return std::make_shared<const Locals>(Locals{apply_umot(l->head, k), map_locals(l->tail, k), l->size});
}

FramePtr apply_frames(const Frame* f, const UMoT& k) {
    if (!f) {
        // The implicit tail: frame j becomes (κ(j), empty).
        if (k.is_identity()) return nullptr;
        return std::make_shared<const Frame>(Frame{k.at(0), nullptr, apply_frames(nullptr, umot_trunc(k, 1))});
    }
    return std::make_shared<const Frame>(Frame{umot_offset(k, f->offset), map_locals(f->locals, k),
                                               apply_frames(f->next.get(), umot_trunc(k, f->offset))});
}
}  // namespace

Envs apply_umot(const Envs& e, const UMoT& k) {
    if (k.is_identity()) return e;
    return Envs::from_head(apply_frames(e.head().get(), k));
}

bool equal(const Normal& a, const Normal& b) { return equal(a.type, b.type) && equal(a.value, b.value); }

namespace {
bool equal_closure(const Closure& a, const Closure& b) { return equal(a.body, b.body) && equal(a.env, b.env); }

bool equal_locals(const Locals* a, const Locals* b) {
    while (a && b) {
        if (a == b) return true;
        if (!equal(a->head, b->head)) return false;
        a = a->tail.get();
        b = b->tail.get();
    }
    return a == b;
}
}  // namespace

bool equal(const Envs& a, const Envs& b) {
    const Frame* x = a.head().get();
    const Frame* y = b.head().get();
    while (x || y) {
        if (x == y) return true;
        std::size_t ox = x ? x->offset : 1, oy = y ? y->offset : 1;
        if (ox != oy) return false;
        if (!equal_locals(x ? x->locals.get() : nullptr, y ? y->locals.get() : nullptr)) return false;
        if (x) x = x->next.get();
        if (y) y = y->next.get();
    }
    return true;
}

bool equal(const ValuePtr& a, const ValuePtr& b) {
    if (a == b) return true;
    if (!a || !b || a->node.index() != b->node.index()) return false;
    return std::visit(overloaded{
                          [&](const dom::Nat&) { return true; },
                          [&](const dom::Zero&) { return true; },
                          [&](const dom::Univ& x) { return x.level == b->as<dom::Univ>()->level; },
                          [&](const dom::BoxTy& x) { return equal(x.inner, b->as<dom::BoxTy>()->inner); },
                          [&](const dom::Pi& x) {
                              const auto& y = *b->as<dom::Pi>();
                              return equal(x.dom, y.dom) && equal_closure(x.cod, y.cod);
                          },
                          [&](const dom::Succ& x) { return equal(x.pred, b->as<dom::Succ>()->pred); },
                          [&](const dom::Box& x) { return equal(x.body, b->as<dom::Box>()->body); },
                          [&](const dom::Lam& x) { return equal_closure(x.body, b->as<dom::Lam>()->body); },
                          [&](const dom::Reflect& x) {
                              const auto& y = *b->as<dom::Reflect>();
                              return equal(x.type, y.type) && equal(x.ne, y.ne);
                          },
                      },
                      a->node);
}

bool equal(const NeutralPtr& a, const NeutralPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->node.index() != b->node.index()) return false;
    return std::visit(overloaded{
                          [&](const ne::Var& x) { return x.level == b->as<ne::Var>()->level; },
                          [&](const ne::App& x) {
                              const auto& y = *b->as<ne::App>();
                              return equal(x.fn, y.fn) && equal(x.arg, y.arg);
                          },
                          [&](const ne::Unbox& x) {
                              const auto& y = *b->as<ne::Unbox>();
                              return x.level == y.level && equal(x.body, y.body);
                          },
                          [&](const ne::Rec& x) {
                              const auto& y = *b->as<ne::Rec>();
                              return equal(x.motive, y.motive) && equal(x.base, y.base) && equal(x.step, y.step) &&
                                     equal(x.scrutinee, y.scrutinee) && equal(x.env, y.env);
                          },
                      },
                      a->node);
}

namespace {
void dbg(std::ostream& os, const ValuePtr& v);
void dbg(std::ostream& os, const NeutralPtr& c);

void dbg_env(std::ostream& os, const Envs& e) {
    os << "{";
    bool first = true;
    for (const Frame* f = e.head().get(); f; f = f->next.get()) {
        if (!first) os << " | ";
        first = false;
        os << f->offset << ":";
        std::vector<const Locals*> ls;
        for (const Locals* l = f->locals.get(); l; l = l->tail.get()) ls.push_back(l);
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
            os << " ";
            dbg(os, (*it)->head);
        }
    }
    os << "}";
}

void dbg_clo(std::ostream& os, const Closure& c) {
    os << "<" << debug_string(c.body) << " ";
    dbg_env(os, c.env);
    os << ">";
}

void dbg(std::ostream& os, const ValuePtr& v) {
    std::visit(overloaded{
                   [&](const dom::Nat&) { os << "Nat"; },
                   [&](const dom::Zero&) { os << "ze"; },
                   [&](const dom::Univ& x) { os << "Ty" << x.level; },
                   [&](const dom::BoxTy& x) {
                       os << "[](";
                       dbg(os, x.inner);
                       os << ")";
                   },
                   [&](const dom::Pi& x) {
                       os << "Pi(";
                       dbg(os, x.dom);
                       os << ", ";
                       dbg_clo(os, x.cod);
                       os << ")";
                   },
                   [&](const dom::Succ& x) {
                       os << "su(";
                       dbg(os, x.pred);
                       os << ")";
                   },
                   [&](const dom::Box& x) {
                       os << "box(";
                       dbg(os, x.body);
                       os << ")";
                   },
                   [&](const dom::Lam& x) {
                       os << "lam";
                       dbg_clo(os, x.body);
                   },
                   [&](const dom::Reflect& x) {
                       os << "up(";
                       dbg(os, x.type);
                       os << ", ";
                       dbg(os, x.ne);
                       os << ")";
                   },
               },
               v->node);
}

void dbg(std::ostream& os, const NeutralPtr& c) {
    std::visit(overloaded{
                   [&](const ne::Var& x) { os << "z" << x.level; },
                   [&](const ne::App& x) {
                       os << "(";
                       dbg(os, x.fn);
                       os << " ";
                       dbg(os, x.arg.value);
                       os << ")";
                   },
                   [&](const ne::Unbox& x) {
                       os << "unbox(" << x.level << ", ";
                       dbg(os, x.body);
                       os << ")";
                   },
                   [&](const ne::Rec& x) {
                       os << "rec(" << debug_string(x.motive) << ", ";
                       dbg(os, x.base);
                       os << ", " << debug_string(x.step) << ", ";
                       dbg(os, x.scrutinee);
                       os << ", ";
                       dbg_env(os, x.env);
                       os << ")";
                   },
               },
               c->node);
}
}  // namespace

std::string debug_string(const ValuePtr& v) {
    std::ostringstream os;
    dbg(os, v);
    return os.str();
}
std::string debug_string(const NeutralPtr& c) {
    std::ostringstream os;
    dbg(os, c);
    return os.str();
}
std::string debug_string(const Envs& e) {
    std::ostringstream os;
    dbg_env(os, e);
    return os.str();
}

}  // namespace mint
