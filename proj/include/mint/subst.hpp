#pragma once

#include <cstddef>

#include "mint/syntax.hpp"

namespace mint {

/// L(σ, n): the number of domain worlds dropped when `n` codomain worlds are
/// dropped from σ. Total on syntax.
std::size_t trunc_offset(const SubstPtr& s, std::size_t n);

/// σ|n. Total on syntax.
SubstPtr truncate(const SubstPtr& s, std::size_t n);

/// q(σ) = (σ ∘ wk), #0
SubstPtr q_lift(const SubstPtr& s);

/// The substitution for the weakening-free modal transformation {k/l}:
/// `l` unit modal extensions wrapped around ⇑ᵏI.
SubstPtr mot_subst(std::size_t k, std::size_t l);

}  // namespace mint
