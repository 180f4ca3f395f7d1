#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mint/syntax.hpp"

namespace mint {

/// Untyped modal transformation. Position i reads offsets[i], or 1 past the
/// end. Kept canonical: no trailing 1s, so the identity is the empty sequence.
class UMoT {
public:
    UMoT() = default;
    explicit UMoT(std::vector<std::size_t> offsets);

    static UMoT identity() { return UMoT(); }

    std::size_t at(std::size_t i) const { return i < offsets_.size() ? offsets_[i] : 1; }
    const std::vector<std::size_t>& offsets() const { return offsets_; }
    bool is_identity() const { return offsets_.empty(); }

    /// ⇑ⁿκ: position 0 reads n, position 1+m reads κ(m).
    UMoT lift(std::size_t n) const;

    friend bool operator==(const UMoT& a, const UMoT& b) { return a.offsets_ == b.offsets_; }

private:
    std::vector<std::size_t> offsets_;
};

std::size_t umot_offset(const UMoT& k, std::size_t n);
UMoT umot_trunc(const UMoT& k, std::size_t n);
/// Applying κ∘κ′ is applying κ, then κ′.
UMoT umot_compose(const UMoT& k, const UMoT& k2);
std::string to_string(const UMoT& k);

struct Value;
struct Neutral;
using ValuePtr = std::shared_ptr<const Value>;
using NeutralPtr = std::shared_ptr<const Neutral>;

/// Persistent list of local values, most recent first.
struct Locals {
    ValuePtr head;
    std::shared_ptr<const Locals> tail;
    std::size_t size;
};
using LocalsPtr = std::shared_ptr<const Locals>;

struct Frame;
using FramePtr = std::shared_ptr<const Frame>;

/// Evaluation environment: a finite list of (offset, locals) frames, frame 0
/// being the current world, followed by an implicit tail of (1, empty).
class Envs {
public:
    Envs() = default;

    std::size_t frame_offset(std::size_t i) const;
    LocalsPtr frame_locals(std::size_t i) const;
    /// Number of explicitly stored frames.
    std::size_t stored_frames() const;
    /// Local lookup in frame 0; null when out of range.
    ValuePtr lookup(std::size_t index) const;
    std::size_t top_size() const;

    Envs ext(std::size_t offset) const;
    Envs bind(ValuePtr v) const;
    Envs drop() const;
    Envs trunc(std::size_t n) const;
    std::size_t offset(std::size_t n) const;

    const FramePtr& head() const { return head_; }
    static Envs from_head(FramePtr f) {
        Envs e;
        e.head_ = std::move(f);
        return e;
    }

private:
    FramePtr head_;
};

struct Frame {
    std::size_t offset;
    LocalsPtr locals;
    FramePtr next;
};

inline Envs envs_empty() { return Envs(); }
inline Envs envs_ext(const Envs& e, std::size_t n) { return e.ext(n); }
inline Envs envs_bind(const Envs& e, ValuePtr v) { return e.bind(std::move(v)); }
inline Envs envs_drop(const Envs& e) { return e.drop(); }
inline Envs envs_trunc(const Envs& e, std::size_t n) { return e.trunc(n); }
inline std::size_t envs_offset(const Envs& e, std::size_t n) { return e.offset(n); }

struct Closure {
    TermPtr body;
    Envs env;
};

namespace dom {
struct Nat {};
struct Univ {
    std::size_t level;
};
/// Inner type lives one world up.
struct BoxTy {
    ValuePtr inner;
};
struct Pi {
    ValuePtr dom;
    Closure cod;
};
struct Zero {};
struct Succ {
    ValuePtr pred;
};
struct Box {
    ValuePtr body;
};
struct Lam {
    Closure body;
};
struct Reflect {
    ValuePtr type;
    NeutralPtr ne;
};
}  // namespace dom

struct Value {
    using Node = std::variant<dom::Nat, dom::Univ, dom::BoxTy, dom::Pi, dom::Zero, dom::Succ, dom::Box,
                              dom::Lam, dom::Reflect>;
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

/// ↓^A(a)
struct Normal {
    ValuePtr type;
    ValuePtr value;
};

namespace ne {
struct Var {
    std::size_t level;
};
struct App {
    NeutralPtr fn;
    Normal arg;
};
struct Unbox {
    std::size_t level;
    NeutralPtr body;
};
/// Motive and step are open terms over `env` (one and two extra binders).
struct Rec {
    TermPtr motive;
    ValuePtr base;
    TermPtr step;
    NeutralPtr scrutinee;
    Envs env;
};
}  // namespace ne

struct Neutral {
    using Node = std::variant<ne::Var, ne::App, ne::Unbox, ne::Rec>;
    Node node;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

// Value builders.
ValuePtr d_nat();
ValuePtr d_univ(std::size_t level);
ValuePtr d_box_ty(ValuePtr inner);
ValuePtr d_pi(ValuePtr dom, Closure cod);
ValuePtr d_zero();
ValuePtr d_succ(ValuePtr pred);
ValuePtr d_box(ValuePtr body);
ValuePtr d_lam(Closure body);
ValuePtr d_reflect(ValuePtr type, NeutralPtr ne);
NeutralPtr n_var(std::size_t level);
NeutralPtr n_app(NeutralPtr fn, Normal arg);
NeutralPtr n_unbox(std::size_t level, NeutralPtr body);
NeutralPtr n_rec(TermPtr motive, ValuePtr base, TermPtr step, NeutralPtr scrutinee, Envs env);

ValuePtr apply_umot(const ValuePtr& a, const UMoT& k);
NeutralPtr apply_umot(const NeutralPtr& c, const UMoT& k);
Normal apply_umot(const Normal& d, const UMoT& k);
Closure apply_umot(const Closure& c, const UMoT& k);
Envs apply_umot(const Envs& e, const UMoT& k);

inline ValuePtr apply_umot_value(const ValuePtr& a, const UMoT& k) { return apply_umot(a, k); }
inline Envs apply_umot_envs(const Envs& e, const UMoT& k) { return apply_umot(e, k); }

/// Structural equality; Envs compare frame by frame with the implicit tail.
bool equal(const ValuePtr& a, const ValuePtr& b);
bool equal(const NeutralPtr& a, const NeutralPtr& b);
bool equal(const Normal& a, const Normal& b);
bool equal(const Envs& a, const Envs& b);

std::string debug_string(const ValuePtr& v);
std::string debug_string(const NeutralPtr& c);
std::string debug_string(const Envs& e);

}  // namespace mint
