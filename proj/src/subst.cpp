#include "mint/subst.hpp"

namespace mint {

std::size_t trunc_offset(const SubstPtr& s, std::size_t n) {
    if (n == 0) return 0;
    return std::visit(overloaded{
                          [&](const subst::Id&) { return n; },
                          [&](const subst::Wk&) { return n; },
                          [&](const subst::Ext& x) { return trunc_offset(x.base, n); },
                          [&](const subst::ModalExt& x) { return x.offset + trunc_offset(x.base, n - 1); },
                          [&](const subst::Comp& x) { return trunc_offset(x.inner, trunc_offset(x.outer, n)); },
                      },
                      s->node);
}

SubstPtr truncate(const SubstPtr& s, std::size_t n) {
    if (n == 0) return s;
    return std::visit(overloaded{
                          [&](const subst::Id&) { return s; },
                          [&](const subst::Wk&) { return id_subst(); },
                          [&](const subst::Ext& x) { return truncate(x.base, n); },
                          [&](const subst::ModalExt& x) { return truncate(x.base, n - 1); },
                          [&](const subst::Comp& x) {
                              return comp(truncate(x.outer, n), truncate(x.inner, trunc_offset(x.outer, n)));
                          },
                      },
                      s->node);
}

SubstPtr q_lift(const SubstPtr& s) { return ext(comp(s, wk()), var(0)); }

SubstPtr mot_subst(std::size_t k, std::size_t l) {
    SubstPtr s = modal_ext(id_subst(), k);
    for (std::size_t i = 0; i < l; ++i) s = modal_ext(s, 1);
    return s;
}

}  // namespace mint
