#include "mint/print.hpp"

#include <algorithm>
#include <array>

namespace mint {

bool is_keyword(const std::string& word) {
    static const std::array<const char*, 9> kws = {"def", "fn", "box", "unbox", "rec", "Ty", "Nat", "zero", "succ"};
    return std::any_of(kws.begin(), kws.end(), [&](const char* k) { return word == k; });
}

namespace {

// 0: binders and arrows, 1: application-like, 2: atoms.
enum Prec { Low = 0, AppPrec = 1, Atom = 2 };

std::string fresh_name(const std::vector<std::string>& world, const char* hint) {
    auto used = [&](const std::string& n) { return std::find(world.begin(), world.end(), n) != world.end(); };
    std::string base = hint;
    if (!used(base)) return base;
    for (std::size_t i = 1;; ++i) {
        std::string n = base + std::to_string(i);
        if (!used(n)) return n;
    }
}

NameStack with(const NameStack& names, const std::string& n) {
    NameStack r = names;
    r.back().push_back(n);
    return r;
}

NameStack up(const NameStack& names) {
    NameStack r = names;
    r.emplace_back();
    return r;
}

NameStack down(const NameStack& names, std::size_t n) {
    if (n >= names.size()) return NameStack{{}};
    return NameStack(names.begin(), names.end() - static_cast<std::ptrdiff_t>(n));
}

bool uses_binder(const TermPtr& body) { return contains_sub(body) || occurs(body, 0); }

std::string paren(std::string s, bool p) { return p ? "(" + s + ")" : s; }

std::string pr(const TermPtr& t, const NameStack& names, int prec) {
    return std::visit(
        overloaded{
            [&](const term::Var& x) -> std::string {
                const auto& w = names.back();
                if (x.index < w.size()) return w[w.size() - 1 - x.index];
                return "#" + std::to_string(x.index);
            },
            [&](const term::Univ& x) -> std::string { return paren("Ty " + std::to_string(x.level), false); },
            [&](const term::NatTy&) -> std::string { return "Nat"; },
            [&](const term::Zero&) -> std::string { return "zero"; },
            [&](const term::Succ& x) -> std::string {
                return paren("succ " + pr(x.pred, names, Atom), prec > AppPrec);
            },
            [&](const term::NatElim& x) -> std::string {
                std::string n = fresh_name(names.back(), "n");
                std::string m = "(" + n + ". " + pr(x.motive, with(names, n), Low) + ")";
                NameStack s1 = with(names, n);
                std::string r = fresh_name(s1.back(), "r");
                std::string step = "(" + n + " " + r + ". " + pr(x.step, with(s1, r), Low) + ")";
                return paren("rec " + m + " " + pr(x.base, names, Atom) + " " + step + " " +
                                 pr(x.scrutinee, names, Atom),
                             prec > AppPrec);
            },
            [&](const term::Pi& x) -> std::string {
                if (!uses_binder(x.cod)) {
                    return paren(pr(x.dom, names, AppPrec) + " -> " + pr(x.cod, with(names, ""), Low), prec > Low);
                }
                std::string n = fresh_name(names.back(), "x");
                return paren("(" + n + " : " + pr(x.dom, names, Low) + ") -> " + pr(x.cod, with(names, n), Low),
                             prec > Low);
            },
            [&](const term::Lam& x) -> std::string {
                std::string n = fresh_name(names.back(), "x");
                return paren("fn " + n + ". " + pr(x.body, with(names, n), Low), prec > Low);
            },
            [&](const term::App& x) -> std::string {
                return paren(pr(x.fn, names, AppPrec) + " " + pr(x.arg, names, Atom), prec > AppPrec);
            },
            [&](const term::BoxTy& x) -> std::string { return "[] " + pr(x.inner, up(names), Atom); },
            [&](const term::BoxIntro& x) -> std::string {
                return paren("box " + pr(x.body, up(names), Atom), prec > AppPrec);
            },
            [&](const term::Unbox& x) -> std::string {
                return paren("unbox " + std::to_string(x.level) + " " + pr(x.body, down(names, x.level), Atom),
                             prec > AppPrec);
            },
            [&](const term::Sub&) -> std::string { return paren(debug_string(t), true); },
        },
        t->node);
}

}  // namespace

std::string print_term(const TermPtr& t, const NameStack& names) {
    NameStack ns = names.empty() ? NameStack{{}} : names;
    return pr(t, ns, Low);
}

}  // namespace mint
