#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mint/domain.hpp"
#include "mint/errors.hpp"

namespace mint {

enum class EvalErrorKind { StuckApplication, StuckUnbox, StuckRec, UnboundVariable, FuelExhausted };
std::string_view eval_error_name(EvalErrorKind k);

class EvalError : public Error {
public:
    EvalError(EvalErrorKind kind, std::string snapshot)
        : Error(std::string(eval_error_name(kind)) + ": " + snapshot), kind_(kind), snapshot_(std::move(snapshot)) {}

    EvalErrorKind kind() const { return kind_; }
    const std::string& snapshot() const { return snapshot_; }

private:
    EvalErrorKind kind_;
    std::string snapshot_;
};

/// Counts calls to the eliminator helpers; exhausting it raises fuel-exhausted.
struct Fuel {
    static constexpr std::size_t default_amount = 1'000'000;
    std::size_t remaining = default_amount;

    void burn() {
        if (remaining == 0) throw EvalError(EvalErrorKind::FuelExhausted, "evaluation step budget spent");
        --remaining;
    }
};

ValuePtr eval(const TermPtr& t, const Envs& env, Fuel& fuel);
Envs eval_subst(const SubstPtr& s, const Envs& env, Fuel& fuel);
ValuePtr do_unbox(std::size_t k, const ValuePtr& a, Fuel& fuel);
ValuePtr do_app(const ValuePtr& f, const ValuePtr& a, Fuel& fuel);
ValuePtr do_rec(const TermPtr& motive, const ValuePtr& base, const TermPtr& step, const ValuePtr& scrutinee,
                const Envs& env, Fuel& fuel);
ValuePtr apply_closure(const Closure& c, const ValuePtr& a, Fuel& fuel);

// Convenience forms with a fresh default budget.
ValuePtr eval(const TermPtr& t, const Envs& env);
Envs eval_subst(const SubstPtr& s, const Envs& env);
ValuePtr do_unbox(std::size_t k, const ValuePtr& a);
ValuePtr do_app(const ValuePtr& f, const ValuePtr& a);
ValuePtr do_rec(const TermPtr& motive, const ValuePtr& base, const TermPtr& step, const ValuePtr& scrutinee,
                const Envs& env);
ValuePtr apply_closure(const Closure& c, const ValuePtr& a);

}  // namespace mint
