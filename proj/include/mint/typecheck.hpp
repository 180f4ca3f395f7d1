#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mint/readback.hpp"

namespace mint {

enum class CheckErrorKind {
    UnboundVariable,
    NotAFunction,
    NotABox,
    NotAUniverse,
    FlavorViolation,
    UniverseMismatch,
    ConversionFailure,
    MalformedStack,
    SubstitutionMismatch,
    CannotInfer,
};
std::string_view check_error_name(CheckErrorKind k);

class CheckError : public Error {
public:
    CheckError(CheckErrorKind kind, std::string message, TermPtr expected = nullptr, TermPtr got = nullptr,
               std::size_t level = 0)
        : Error(std::string(check_error_name(kind)) + ": " + message),
          kind_(kind),
          message_(std::move(message)),
          expected_(std::move(expected)),
          got_(std::move(got)),
          level_(level) {}

    CheckErrorKind kind() const { return kind_; }
    const std::string& message() const { return message_; }
    /// Both readbacks, for conversion failures.
    const TermPtr& expected() const { return expected_; }
    const TermPtr& got() const { return got_; }
    /// The offending level, for flavor violations.
    std::size_t level() const { return level_; }
    SourceLoc loc() const { return loc_; }
    void set_loc(SourceLoc loc) { loc_ = loc; }

private:
    CheckErrorKind kind_;
    std::string message_;
    TermPtr expected_;
    TermPtr got_;
    std::size_t level_;
    SourceLoc loc_;
};

/// A checked context stack: normal-form types, the initial environment, and
/// each binding's type as a value. Values are level-based, so a type value
/// stays valid when more bindings are added.
class Ctx {
public:
    static Ctx initial();

    const CtxStack& stack() const { return stack_; }
    const Envs& env() const { return env_; }
    NumberStack lengths() const { return world_lengths(stack_); }
    std::size_t depth() const { return stack_.depth(); }
    std::size_t top_size() const { return stack_.top().size(); }
    /// Type value of local `index` in the topmost world; null when unbound.
    ValuePtr lookup(std::size_t index) const;

    Ctx push_world() const;
    Ctx bind(const ValuePtr& type) const;
    /// Removes the innermost binding of the topmost world.
    Ctx pop() const;
    Ctx truncate(std::size_t n) const;
    /// A fresh neutral for the next binding of the topmost world.
    ValuePtr next_var(const ValuePtr& type) const;

private:
    CtxStack stack_;
    Envs env_;
    std::vector<std::vector<ValuePtr>> types_;
};

class Checker {
public:
    static constexpr std::size_t default_universe_cap = 64;

    explicit Checker(Flavor flavor, std::size_t universe_cap = default_universe_cap)
        : flavor_(flavor), universe_cap_(universe_cap) {}

    Flavor flavor() const { return flavor_; }

    /// Checks every entry of the stack and returns the checked context.
    Ctx check_stack(const CtxStack& stack) const;

    ValuePtr infer(const Ctx& ctx, const TermPtr& t) const;
    void check(const Ctx& ctx, const TermPtr& t, const ValuePtr& expected) const;
    /// Checks that `t` is a type; returns its universe level.
    std::size_t check_type(const Ctx& ctx, const TermPtr& t) const;
    void check_subst(const Ctx& gamma, const SubstPtr& s, const Ctx& delta) const;

    /// `actual` may be used where `expected` is required (cumulativity at the first Ty only).
    bool subtype(const Ctx& ctx, const ValuePtr& actual, const ValuePtr& expected) const;
    bool convertible(const Ctx& ctx, const ValuePtr& a, const ValuePtr& b) const;

    // Stack-level conveniences.
    ValuePtr infer(const CtxStack& stack, const TermPtr& t) const { return infer(check_stack(stack), t); }
    /// Checks `type` is a type and `t : type`.
    void check_typed(const CtxStack& stack, const TermPtr& t, const TermPtr& type) const;

private:
    Ctx subst_codomain(const Ctx& gamma, const SubstPtr& s) const;
    void require_level(std::size_t n, const char* what) const;

    Flavor flavor_;
    std::size_t universe_cap_;
};

}  // namespace mint
