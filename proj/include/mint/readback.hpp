#pragma once

#include <cstddef>
#include <vector>

#include "mint/eval.hpp"

namespace mint {

/// Per-world context lengths, topmost last.
using NumberStack = std::vector<std::size_t>;

class ReadbackError : public Error {
public:
    using Error::Error;
};

struct ReadbackState {
    Fuel fuel;
    /// How often a variable index came out negative and was clamped to 0.
    std::size_t clamps = 0;
};

TermPtr rb_nf(const NumberStack& ns, const Normal& d, ReadbackState& st);
TermPtr rb_ne(const NumberStack& ns, const NeutralPtr& c, ReadbackState& st);
TermPtr rb_ty(const NumberStack& ns, const ValuePtr& a, ReadbackState& st);

TermPtr rb_nf(const NumberStack& ns, const Normal& d);
TermPtr rb_ne(const NumberStack& ns, const NeutralPtr& c);
TermPtr rb_ty(const NumberStack& ns, const ValuePtr& a);

Envs initial_env(const CtxStack& stack);

TermPtr nbe(const CtxStack& stack, const TermPtr& t, const TermPtr& type, ReadbackState& st);
TermPtr nbe(const CtxStack& stack, const TermPtr& t, const TermPtr& type);
/// Normal form of a type.
TermPtr nbe_type(const CtxStack& stack, const TermPtr& type);

}  // namespace mint
