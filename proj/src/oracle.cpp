#include "mint/oracle.hpp"

#include <stdexcept>

#include "mint/subst.hpp"

namespace mint::oracle {

const std::vector<RuleInfo>& registry() {
    static const std::vector<RuleInfo> rules = {
        {Rule::BetaPi, "beta-pi", "(fn. t) s ~> t[I, s]", false},
        {Rule::BetaBox, "beta-box", "unbox n (box t) ~> t[^n I]", false},
        {Rule::BetaZero, "beta-ze", "rec M s u zero ~> s", false},
        {Rule::BetaSucc, "beta-su", "rec M s u (succ t) ~> u[I, t, rec M s u t]", false},
        {Rule::EtaPi, "eta-pi", "t ~> fn. t[wk] #0", true},
        {Rule::EtaBox, "eta-box", "t ~> box (unbox 1 t)", true},
        {Rule::SubId, "sub-id", "t[I] ~> t", false},
        {Rule::SubComp, "sub-comp", "t[s o d] ~> t[s][d]", false},
        {Rule::VarExtZero, "var-ext-zero", "#0[s, t] ~> t", false},
        {Rule::VarExtSucc, "var-ext-succ", "#(k+1)[s, t] ~> #k[s]", false},
        {Rule::VarWk, "var-wk", "#k[wk] ~> #(k+1)", false},
        {Rule::SubNat, "sub-nat", "Nat[s] ~> Nat", false},
        {Rule::SubZero, "sub-zero", "zero[s] ~> zero", false},
        {Rule::SubSucc, "sub-succ", "(succ t)[s] ~> succ t[s]", false},
        {Rule::SubRec, "sub-rec", "(rec M s u t)[d] ~> rec M[q d] s[d] u[q q d] t[d]", false},
        {Rule::SubUniv, "sub-univ", "Ty i[s] ~> Ty i", false},
        {Rule::SubPi, "sub-pi", "(Pi A B)[s] ~> Pi A[s] B[q s]", false},
        {Rule::SubLam, "sub-lam", "(fn. t)[s] ~> fn. t[q s]", false},
        {Rule::SubApp, "sub-app", "(t u)[s] ~> t[s] u[s]", false},
        {Rule::SubBoxTy, "sub-boxty", "([] A)[s] ~> [] A[^1 s]", false},
        {Rule::SubBox, "sub-box", "(box t)[s] ~> box t[^1 s]", false},
        {Rule::SubUnbox, "sub-unbox", "(unbox n t)[s] ~> unbox L(s,n) t[s|n]", false},
        {Rule::CompIdLeft, "comp-id-left", "I o s ~> s", false},
        {Rule::CompIdRight, "comp-id-right", "s o I ~> s", false},
        {Rule::CompAssoc, "comp-assoc", "(s o d) o e ~> s o (d o e)", false},
        {Rule::CompExt, "comp-ext", "(s, t) o d ~> (s o d), t[d]", false},
        {Rule::CompWkExt, "comp-wk-ext", "wk o (s, t) ~> s", false},
        {Rule::CompModal, "comp-modal", "^n s o d ~> ^L(d,n) (s o d|n)", false},
        {Rule::ExtEta, "ext-eta", "s ~> (wk o s), #0[s]", true},
        {Rule::ModalEta, "modal-eta", "s ~> ^L(s,1) (s|1)", true},
    };
    return rules;
}

const RuleInfo& info(Rule r) {
    for (const auto& i : registry())
        if (i.rule == r) return i;
    throw std::logic_error("unregistered rule");
}

bool equal(const Node& a, const Node& b) {
    if (a.index() != b.index()) return false;
    if (const auto* t = std::get_if<TermPtr>(&a)) return mint::equal(*t, std::get<TermPtr>(b));
    return mint::equal(std::get<SubstPtr>(a), std::get<SubstPtr>(b));
}

std::string debug_string(const Node& n) {
    if (const auto* t = std::get_if<TermPtr>(&n)) return mint::debug_string(*t);
    return mint::debug_string(std::get<SubstPtr>(n));
}

namespace {

std::vector<Node> children(const Node& n) {
    if (const auto* tp = std::get_if<TermPtr>(&n)) {
        return std::visit(overloaded{
                              [](const term::Succ& x) -> std::vector<Node> { return {x.pred}; },
                              [](const term::NatElim& x) -> std::vector<Node> {
                                  return {x.motive, x.base, x.step, x.scrutinee};
                              },
                              [](const term::Pi& x) -> std::vector<Node> { return {x.dom, x.cod}; },
                              [](const term::Lam& x) -> std::vector<Node> { return {x.body}; },
                              [](const term::App& x) -> std::vector<Node> { return {x.fn, x.arg}; },
                              [](const term::BoxTy& x) -> std::vector<Node> { return {x.inner}; },
                              [](const term::BoxIntro& x) -> std::vector<Node> { return {x.body}; },
                              [](const term::Unbox& x) -> std::vector<Node> { return {x.body}; },
                              [](const term::Sub& x) -> std::vector<Node> { return {x.body, x.subst}; },
                              [](const auto&) -> std::vector<Node> { return {}; },
                          },
                          (*tp)->node);
    }
    const auto& s = std::get<SubstPtr>(n);
    return std::visit(overloaded{
                          [](const subst::Ext& x) -> std::vector<Node> { return {x.base, x.term}; },
                          [](const subst::ModalExt& x) -> std::vector<Node> { return {x.base}; },
                          [](const subst::Comp& x) -> std::vector<Node> { return {x.outer, x.inner}; },
                          [](const auto&) -> std::vector<Node> { return {}; },
                      },
                      s->node);
}

TermPtr T(const Node& n) { return std::get<TermPtr>(n); }
SubstPtr S(const Node& n) { return std::get<SubstPtr>(n); }

Node rebuild(const Node& n, const std::vector<Node>& c) {
    if (const auto* tp = std::get_if<TermPtr>(&n)) {
        const TermPtr& t = *tp;
        return std::visit(overloaded{
                              [&](const term::Succ&) -> Node { return succ(T(c[0])); },
                              [&](const term::NatElim&) -> Node { return nat_elim(T(c[0]), T(c[1]), T(c[2]), T(c[3])); },
                              [&](const term::Pi&) -> Node { return pi(T(c[0]), T(c[1])); },
                              [&](const term::Lam&) -> Node { return lam(T(c[0])); },
                              [&](const term::App&) -> Node { return app(T(c[0]), T(c[1])); },
                              [&](const term::BoxTy&) -> Node { return box_ty(T(c[0])); },
                              [&](const term::BoxIntro&) -> Node { return box(T(c[0])); },
                              [&](const term::Unbox& x) -> Node { return unbox(x.level, T(c[0])); },
                              [&](const term::Sub& x) -> Node {
                                  return TermPtr(std::make_shared<const Term>(
                                      Term{term::Sub{T(c[0]), S(c[1]), x.annot}}));
                              },
                              [&](const auto&) -> Node { return t; },
                          },
                          t->node);
    }
    const auto& s = std::get<SubstPtr>(n);
    return std::visit(overloaded{
                          [&](const subst::Ext&) -> Node { return ext(S(c[0]), T(c[1])); },
                          [&](const subst::ModalExt& x) -> Node { return modal_ext(S(c[0]), x.offset); },
                          [&](const subst::Comp&) -> Node { return comp(S(c[0]), S(c[1])); },
                          [&](const auto&) -> Node { return s; },
                      },
                      s->node);
}

std::optional<Node> term_rule(Rule r, const TermPtr& t) {
    using R = std::optional<Node>;
    switch (r) {
        case Rule::BetaPi:
            if (const auto* a = t->as<term::App>())
                if (const auto* l = a->fn->as<term::Lam>()) return R(sub(l->body, ext(id_subst(), a->arg)));
            return std::nullopt;
        case Rule::BetaBox:
            if (const auto* u = t->as<term::Unbox>())
                if (const auto* b = u->body->as<term::BoxIntro>()) return R(sub(b->body, modal_ext(id_subst(), u->level)));
            return std::nullopt;
        case Rule::BetaZero:
            if (const auto* e = t->as<term::NatElim>())
                if (e->scrutinee->is<term::Zero>()) return R(e->base);
            return std::nullopt;
        case Rule::BetaSucc:
            if (const auto* e = t->as<term::NatElim>())
                if (const auto* s = e->scrutinee->as<term::Succ>())
                    return R(sub(e->step, ext(ext(id_subst(), s->pred), nat_elim(e->motive, e->base, e->step, s->pred))));
            return std::nullopt;
        case Rule::EtaPi: return R(lam(app(sub(t, wk()), var(0))));
        case Rule::EtaBox: return R(box(unbox(1, t)));
        default: break;
    }
    const auto* sb = t->as<term::Sub>();
    if (!sb) return std::nullopt;
    const TermPtr& body = sb->body;
    const SubstPtr& s = sb->subst;
    switch (r) {
        case Rule::SubId:
            if (s->is<subst::Id>()) return R(body);
            return std::nullopt;
        case Rule::SubComp:
            if (const auto* c = s->as<subst::Comp>()) return R(sub(sub(body, c->outer), c->inner));
            return std::nullopt;
        case Rule::VarExtZero:
            if (const auto* v = body->as<term::Var>())
                if (const auto* e = s->as<subst::Ext>(); e && v->index == 0) return R(e->term);
            return std::nullopt;
        case Rule::VarExtSucc:
            if (const auto* v = body->as<term::Var>())
                if (const auto* e = s->as<subst::Ext>(); e && v->index > 0) return R(sub(var(v->index - 1), e->base));
            return std::nullopt;
        case Rule::VarWk:
            if (const auto* v = body->as<term::Var>())
                if (s->is<subst::Wk>()) return R(var(v->index + 1));
            return std::nullopt;
        case Rule::SubNat:
            if (body->is<term::NatTy>()) return R(body);
            return std::nullopt;
        case Rule::SubZero:
            if (body->is<term::Zero>()) return R(body);
            return std::nullopt;
        case Rule::SubSucc:
            if (const auto* x = body->as<term::Succ>()) return R(succ(sub(x->pred, s)));
            return std::nullopt;
        case Rule::SubRec:
            if (const auto* x = body->as<term::NatElim>())
                return R(nat_elim(sub(x->motive, q_lift(s)), sub(x->base, s), sub(x->step, q_lift(q_lift(s))),
                                  sub(x->scrutinee, s)));
            return std::nullopt;
        case Rule::SubUniv:
            if (body->is<term::Univ>()) return R(body);
            return std::nullopt;
        case Rule::SubPi:
            if (const auto* x = body->as<term::Pi>()) return R(pi(sub(x->dom, s), sub(x->cod, q_lift(s))));
            return std::nullopt;
        case Rule::SubLam:
            if (const auto* x = body->as<term::Lam>()) return R(lam(sub(x->body, q_lift(s))));
            return std::nullopt;
        case Rule::SubApp:
            if (const auto* x = body->as<term::App>()) return R(app(sub(x->fn, s), sub(x->arg, s)));
            return std::nullopt;
        case Rule::SubBoxTy:
            if (const auto* x = body->as<term::BoxTy>()) return R(box_ty(sub(x->inner, modal_ext(s, 1))));
            return std::nullopt;
        case Rule::SubBox:
            if (const auto* x = body->as<term::BoxIntro>()) return R(box(sub(x->body, modal_ext(s, 1))));
            return std::nullopt;
        case Rule::SubUnbox:
            if (const auto* x = body->as<term::Unbox>())
                return R(unbox(trunc_offset(s, x->level), sub(x->body, truncate(s, x->level))));
            return std::nullopt;
        default: return std::nullopt;
    }
}

std::optional<Node> subst_rule(Rule r, const SubstPtr& s) {
    using R = std::optional<Node>;
    switch (r) {
        case Rule::ExtEta: return R(ext(comp(wk(), s), sub(var(0), s)));
        case Rule::ModalEta: return R(modal_ext(truncate(s, 1), trunc_offset(s, 1)));
        default: break;
    }
    const auto* c = s->as<subst::Comp>();
    if (!c) return std::nullopt;
    switch (r) {
        case Rule::CompIdLeft:
            if (c->outer->is<subst::Id>()) return R(c->inner);
            return std::nullopt;
        case Rule::CompIdRight:
            if (c->inner->is<subst::Id>()) return R(c->outer);
            return std::nullopt;
        case Rule::CompAssoc:
            if (const auto* o = c->outer->as<subst::Comp>()) return R(comp(o->outer, comp(o->inner, c->inner)));
            return std::nullopt;
        case Rule::CompExt:
            if (const auto* e = c->outer->as<subst::Ext>())
                return R(ext(comp(e->base, c->inner), sub(e->term, c->inner)));
            return std::nullopt;
        case Rule::CompWkExt:
            if (c->outer->is<subst::Wk>())
                if (const auto* e = c->inner->as<subst::Ext>()) return R(e->base);
            return std::nullopt;
        case Rule::CompModal:
            if (const auto* m = c->outer->as<subst::ModalExt>())
                return R(modal_ext(comp(m->base, truncate(c->inner, m->offset)), trunc_offset(c->inner, m->offset)));
            return std::nullopt;
        default: return std::nullopt;
    }
}

bool is_term_rule(Rule r) { return r != Rule::ExtEta && r != Rule::ModalEta && !(r >= Rule::CompIdLeft && r <= Rule::CompModal); }

struct Exhausted {};

class Normalizer {
public:
    Normalizer(std::size_t budget, std::vector<Rewrite>* log) : budget_(budget), log_(log) {}

    Node run(const Node& n, Path& path) {
        Node cur = norm_children(n, path);
        for (;;) {
            std::optional<std::pair<Rule, Node>> step;
            for (const auto& ri : registry()) {
                if (ri.expansion) continue;
                if (auto res = apply_at_root(ri.rule, cur)) {
                    step.emplace(ri.rule, *res);
                    break;
                }
            }
            if (!step) return cur;
            if (budget_ == 0) throw Exhausted{};
            --budget_;
            if (log_) log_->push_back(Rewrite{step->first, path, step->second});
            cur = norm_children(step->second, path);
        }
    }

private:
    Node norm_children(const Node& n, Path& path) {
        std::vector<Node> cs = children(n);
        if (cs.empty()) return n;
        bool changed = false;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            path.push_back(i);
            Node r = run(cs[i], path);
            path.pop_back();
            // Identity of the pointer is enough to detect an untouched child.
            bool same = r.index() == cs[i].index() &&
                        (std::holds_alternative<TermPtr>(r) ? std::get<TermPtr>(r) == std::get<TermPtr>(cs[i])
                                                            : std::get<SubstPtr>(r) == std::get<SubstPtr>(cs[i]));
            if (!same) {
                cs[i] = r;
                changed = true;
            }
        }
        return changed ? rebuild(n, cs) : n;
    }

    std::size_t budget_;
    std::vector<Rewrite>* log_;
};

enum class Mismatch { None, Expandable, Hard };

// Finds η-expandable mismatches between two normalized terms and expands the
// non-canonical side in place, one layer each.
Mismatch expand_mismatches(Node& a, Node& b, Path& path, std::vector<Rewrite>& la, std::vector<Rewrite>& lb) {
    if (equal(a, b)) return Mismatch::None;
    auto* ta = std::get_if<TermPtr>(&a);
    auto* tb = std::get_if<TermPtr>(&b);
    if (ta && tb) {
        auto eta = [&](Rule r, Node& side, std::vector<Rewrite>& log) {
            Node res = *apply_at_root(r, side);
            log.push_back(Rewrite{r, path, res});
            side = res;
            return Mismatch::Expandable;
        };
        bool la_ = (*ta)->is<term::Lam>(), lb_ = (*tb)->is<term::Lam>();
        if (la_ && !lb_) return eta(Rule::EtaPi, b, lb);
        if (lb_ && !la_) return eta(Rule::EtaPi, a, la);
        bool ba = (*ta)->is<term::BoxIntro>(), bb = (*tb)->is<term::BoxIntro>();
        if (ba && !bb) return eta(Rule::EtaBox, b, lb);
        if (bb && !ba) return eta(Rule::EtaBox, a, la);
    }
    if (a.index() != b.index()) return Mismatch::Hard;
    std::vector<Node> ca = children(a), cb = children(b);
    // Same constructor with the same scalar payload is required to descend.
    bool same_head = false;
    if (ta) {
        const TermPtr& x = *ta;
        const TermPtr& y = *tb;
        if (x->node.index() == y->node.index()) {
            same_head = true;
            if (const auto* v = x->as<term::Var>()) same_head = v->index == y->as<term::Var>()->index;
            if (const auto* u = x->as<term::Univ>()) same_head = u->level == y->as<term::Univ>()->level;
            if (const auto* u = x->as<term::Unbox>()) same_head = u->level == y->as<term::Unbox>()->level;
        }
    } else {
        const SubstPtr& x = std::get<SubstPtr>(a);
        const SubstPtr& y = std::get<SubstPtr>(b);
        if (x->node.index() == y->node.index()) {
            same_head = true;
            if (const auto* m = x->as<subst::ModalExt>()) same_head = m->offset == y->as<subst::ModalExt>()->offset;
        }
    }
    if (!same_head || ca.size() != cb.size() || ca.empty()) return Mismatch::Hard;
    Mismatch result = Mismatch::None;
    bool changed = false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        path.push_back(i);
        Mismatch m = expand_mismatches(ca[i], cb[i], path, la, lb);
        path.pop_back();
        if (m == Mismatch::Hard) return Mismatch::Hard;
        if (m == Mismatch::Expandable) {
            result = Mismatch::Expandable;
            changed = true;
        }
    }
    if (changed) {
        a = rebuild(a, ca);
        b = rebuild(b, cb);
    }
    return result;
}

void collect(const Node& n, Path& path, std::vector<Rewrite>& out) {
    for (const auto& ri : registry()) {
        if (ri.expansion) continue;
        if (auto r = apply_at_root(ri.rule, n)) out.push_back(Rewrite{ri.rule, path, *r});
    }
    std::vector<Node> cs = children(n);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        path.push_back(i);
        collect(cs[i], path, out);
        path.pop_back();
    }
}

}  // namespace

std::optional<Node> apply_at_root(Rule r, const Node& n) {
    if (const auto* t = std::get_if<TermPtr>(&n)) {
        if (!is_term_rule(r)) return std::nullopt;
        return term_rule(r, *t);
    }
    if (is_term_rule(r)) return std::nullopt;
    return subst_rule(r, std::get<SubstPtr>(n));
}

std::vector<Rewrite> rewrite_step(const TermPtr& t) {
    std::vector<Rewrite> out;
    Path p;
    collect(t, p, out);
    out.push_back(Rewrite{Rule::EtaPi, {}, *apply_at_root(Rule::EtaPi, Node(t))});
    out.push_back(Rewrite{Rule::EtaBox, {}, *apply_at_root(Rule::EtaBox, Node(t))});
    return out;
}

std::optional<Node> at_path(const Node& n, const Path& p) {
    Node cur = n;
    for (std::size_t i : p) {
        std::vector<Node> cs = children(cur);
        if (i >= cs.size()) return std::nullopt;
        cur = cs[i];
    }
    return cur;
}

namespace {
Node replace_from(const Node& n, const Path& p, std::size_t k, const Node& repl) {
    if (k == p.size()) return repl;
    std::vector<Node> cs = children(n);
    if (p[k] >= cs.size()) throw std::out_of_range("path leaves the term");
    cs[p[k]] = replace_from(cs[p[k]], p, k + 1, repl);
    return rebuild(n, cs);
}
}  // namespace

Node replace_at(const Node& n, const Path& p, const Node& replacement) { return replace_from(n, p, 0, replacement); }

std::optional<TermPtr> normalize(const TermPtr& t, std::size_t step_budget) {
    Normalizer nz(step_budget, nullptr);
    Path p;
    try {
        return std::get<TermPtr>(nz.run(t, p));
    } catch (const Exhausted&) {
        return std::nullopt;
    }
}

Verdict bounded_equiv(const TermPtr& a, const TermPtr& b, std::size_t depth) {
    Limits l;
    l.depth = depth;
    return bounded_equiv(a, b, l);
}

Verdict bounded_equiv(const TermPtr& a, const TermPtr& b, const Limits& limits) {
    Verdict v;
    Node left = a, right = b;
    Normalizer nl(limits.step_budget, &v.trace.left);
    Normalizer nr(limits.step_budget, &v.trace.right);
    try {
        for (std::size_t round = 1; round <= limits.depth; ++round) {
            v.rounds = round;
            Path p;
            left = nl.run(left, p);
            right = nr.run(right, p);
            if (equal(left, right)) {
                v.equiv = true;
                break;
            }
            Mismatch m = expand_mismatches(left, right, p, v.trace.left, v.trace.right);
            if (m != Mismatch::Expandable) {
                v.reason = "distinct normal forms";
                break;
            }
            if (round == limits.depth) v.reason = "depth exhausted";
        }
    } catch (const Exhausted&) {
        v.reason = "step budget exhausted";
    }
    v.left_end = std::get<TermPtr>(left);
    v.right_end = std::get<TermPtr>(right);
    return v;
}

std::optional<TermPtr> replay(const TermPtr& start, const std::vector<Rewrite>& steps) {
    Node cur = start;
    for (const auto& s : steps) {
        auto at = at_path(cur, s.path);
        if (!at) return std::nullopt;
        auto r = apply_at_root(s.rule, *at);
        if (!r || !equal(*r, s.result)) return std::nullopt;
        cur = replace_at(cur, s.path, *r);
    }
    return std::get<TermPtr>(cur);
}

bool replays(const TermPtr& a, const TermPtr& b, const Verdict& v) {
    auto l = replay(a, v.trace.left);
    auto r = replay(b, v.trace.right);
    if (!l || !r) return false;
    if (!mint::equal(*l, v.left_end) || !mint::equal(*r, v.right_end)) return false;
    return !v.equiv || mint::equal(*l, *r);
}

}  // namespace mint::oracle
