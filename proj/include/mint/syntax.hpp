#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mint/errors.hpp"

namespace mint {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Which unbox levels (and modal-extension offsets) a modal system admits.
enum class Flavor { K, T, K4, S4 };

bool allows(Flavor flavor, std::size_t level);
std::string_view flavor_name(Flavor flavor);
std::optional<Flavor> parse_flavor(std::string_view text);

struct Term;
struct Subst;
using TermPtr = std::shared_ptr<const Term>;
using SubstPtr = std::shared_ptr<const Subst>;

/// A context stack. `worlds.back()` is the topmost (current) world, and inside a
/// world the innermost binder is last. Each entry is the type of a binding, typed
/// in the stack formed by everything before it.
struct CtxStack {
    std::vector<std::vector<TermPtr>> worlds;

    static CtxStack initial() { return CtxStack{{{}}}; }

    std::size_t depth() const { return worlds.size(); }
    const std::vector<TermPtr>& top() const { return worlds.back(); }
    CtxStack push_world() const;
    CtxStack bind(TermPtr type) const;
};

/// Drops the topmost `n` worlds. Throws StackError unless n < |stack|.
CtxStack stack_truncate(const CtxStack& stack, std::size_t n);

/// Number of bindings in each world, bottom first.
std::vector<std::size_t> world_lengths(const CtxStack& stack);

namespace term {
struct Var {
    std::size_t index;
};
struct Univ {
    std::size_t level;
};
struct NatTy {};
struct Zero {};
struct Succ {
    TermPtr pred;
};
/// `motive` binds one variable (the scrutinee); `step` binds two: the
/// predecessor (index 1) and the recursive result (index 0).
struct NatElim {
    TermPtr motive;
    TermPtr base;
    TermPtr step;
    TermPtr scrutinee;
};
struct Pi {
    TermPtr dom;
    TermPtr cod;
};
struct Lam {
    TermPtr body;
};
struct App {
    TermPtr fn;
    TermPtr arg;
};
struct BoxTy {
    TermPtr inner;
};
struct BoxIntro {
    TermPtr body;
};
struct Unbox {
    std::size_t level;
    TermPtr body;
};
/// Explicit substitution `body[subst]`. `annot` is the codomain stack (where
/// `body` lives); it is metadata for the checker and is ignored by equality.
struct Sub {
    TermPtr body;
    SubstPtr subst;
    std::shared_ptr<const CtxStack> annot;
};
}  // namespace term

struct Term {
    using Node = std::variant<term::Var, term::Univ, term::NatTy, term::Zero, term::Succ,
                              term::NatElim, term::Pi, term::Lam, term::App, term::BoxTy,
                              term::BoxIntro, term::Unbox, term::Sub>;
    Node node;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
    template <class T>
    bool is() const {
        return std::holds_alternative<T>(node);
    }
};

namespace subst {
struct Id {};
/// Drops the innermost binding of the topmost codomain world.
struct Wk {};
struct Ext {
    SubstPtr base;
    TermPtr term;
};
struct ModalExt {
    SubstPtr base;
    std::size_t offset;
};
/// `outer ∘ inner`: apply `inner` first.
struct Comp {
    SubstPtr outer;
    SubstPtr inner;
};
}  // namespace subst

struct Subst {
    using Node = std::variant<subst::Id, subst::Wk, subst::Ext, subst::ModalExt, subst::Comp>;
    Node node;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
    template <class T>
    bool is() const {
        return std::holds_alternative<T>(node);
    }
};

// Term builders.
TermPtr var(std::size_t index);
TermPtr univ(std::size_t level);
TermPtr nat();
TermPtr zero();
TermPtr succ(TermPtr t);
TermPtr nat_elim(TermPtr motive, TermPtr base, TermPtr step, TermPtr scrutinee);
TermPtr pi(TermPtr dom, TermPtr cod);
TermPtr arrow(TermPtr dom, TermPtr cod);  // non-dependent; weakens `cod`
TermPtr lam(TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr box_ty(TermPtr inner);
TermPtr box(TermPtr body);
TermPtr unbox(std::size_t level, TermPtr body);
TermPtr sub(TermPtr body, SubstPtr s, std::optional<CtxStack> annot = std::nullopt);
TermPtr numeral(std::size_t n);

// Substitution builders.
SubstPtr id_subst();
SubstPtr wk();
SubstPtr ext(SubstPtr base, TermPtr t);
SubstPtr modal_ext(SubstPtr base, std::size_t offset);
SubstPtr comp(SubstPtr outer, SubstPtr inner);

/// Structural equality. Sub annotations are not compared.
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const SubstPtr& a, const SubstPtr& b);
bool equal(const CtxStack& a, const CtxStack& b);

bool contains_sub(const TermPtr& t);
std::size_t term_depth(const TermPtr& t);
std::size_t term_size(const TermPtr& t);

/// Shifts free variables of the current world whose index is >= cutoff by
/// `amount`. Occurrences reached through box/unbox are tracked per world.
/// Sub-free terms only.
TermPtr shift(const TermPtr& t, std::size_t amount, std::size_t cutoff = 0);

/// True when local variable `index` of the current world occurs free in `t`.
/// Sub-free terms only.
bool occurs(const TermPtr& t, std::size_t index);

enum class NfClass { Nf, Ne, Neither };
std::string_view nf_class_name(NfClass c);

/// Purely syntactic classification against the normal/neutral grammars.
NfClass classify_nf(const TermPtr& t);
inline bool is_normal(const TermPtr& t) { return classify_nf(t) != NfClass::Neither; }

/// Debug rendering with raw de Bruijn indices and explicit substitutions.
std::string debug_string(const TermPtr& t);
std::string debug_string(const SubstPtr& s);

}  // namespace mint
