#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mint/domain.hpp"
#include "mint/syntax.hpp"

namespace mint::testing {

/// Simple closed types: Nat, []A, A -> B. Enough to drive a typed generator
/// without dependent bookkeeping.
struct SType;
using STypePtr = std::shared_ptr<const SType>;
struct SType {
    enum Kind { Nat, Box, Arrow } kind;
    STypePtr a;
    STypePtr b;
};

STypePtr s_nat();
STypePtr s_box(STypePtr a);
STypePtr s_arrow(STypePtr a, STypePtr b);
bool same(const STypePtr& a, const STypePtr& b);
TermPtr to_term(const STypePtr& t);
std::string to_string(const STypePtr& t);

/// Worlds bottom first, innermost binding last.
using GStack = std::vector<std::vector<STypePtr>>;
CtxStack to_ctx(const GStack& g);
GStack g_truncate(const GStack& g, std::size_t n);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
    std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return std::bernoulli_distribution(p)(eng_); }

private:
    std::mt19937_64 eng_;
};

struct TypedTerm {
    CtxStack stack;
    TermPtr term;
    TermPtr type;
    Flavor flavor;
};

struct TypedSubst {
    SubstPtr subst;
    GStack domain;
    GStack codomain;
};

class Generator {
public:
    Generator(Flavor flavor, std::uint64_t seed) : flavor_(flavor), rng_(seed) {}

    Rng& rng() { return rng_; }
    Flavor flavor() const { return flavor_; }

    STypePtr type(std::size_t depth);
    /// A term of type `t` in `g`; `depth` bounds the nesting of generated redexes.
    TermPtr check(const GStack& g, const STypePtr& t, std::size_t depth);
    /// A well-typed substitution out of `domain`.
    TypedSubst subst(const GStack& domain, std::size_t depth);
    bool checks(const TypedSubst& s) const;
    GStack stack();

private:
    TermPtr intro(const GStack& g, const STypePtr& t, std::size_t depth);
    TermPtr elim(const GStack& g, const STypePtr& t, std::size_t depth);
    TermPtr variable(const GStack& g, const STypePtr& t);
    std::vector<std::size_t> levels_below(std::size_t depth);

    Flavor flavor_;
    Rng rng_;
};

/// Random well-typed terms of depth <= 6 across all flavors plus a fixed list
/// of dependent terms (polymorphism, large elimination, the modal axioms).
std::vector<TypedTerm> corpus(std::size_t per_flavor, std::uint64_t seed);
std::vector<TypedTerm> dependent_terms();

UMoT random_umot(Rng& r, std::size_t max_len = 5, std::size_t max_offset = 3);
ValuePtr random_value(Rng& r, std::size_t depth);
NeutralPtr random_neutral(Rng& r, std::size_t depth);
Envs random_envs(Rng& r, std::size_t depth);
/// Raw (possibly ill-typed) substitution syntax.
SubstPtr random_raw_subst(Rng& r, std::size_t depth);

/// The Sub-free term list used by parse/print round trips.
std::vector<TermPtr> random_raw_terms(Rng& r, std::size_t count, std::size_t depth);

}  // namespace mint::testing
