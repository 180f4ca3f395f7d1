#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mint/syntax.hpp"

namespace mint::oracle {

/// One entry per declarative equivalence rule; congruence is implicit in the
/// positional rewriter.
enum class Rule {
    BetaPi,       // (fn. t) s            ~> t[I, s]
    BetaBox,      // unbox n (box t)      ~> t[^n I]
    BetaZero,     // rec M s u zero       ~> s
    BetaSucc,     // rec M s u (succ t)   ~> u[I, t, rec M s u t]
    EtaPi,        // t                    ~> fn. t[wk] #0
    EtaBox,       // t                    ~> box (unbox 1 t)
    SubId,        // t[I]                 ~> t
    SubComp,      // t[s o d]             ~> t[s][d]
    VarExtZero,   // #0[s, t]             ~> t
    VarExtSucc,   // #(k+1)[s, t]         ~> #k[s]
    VarWk,        // #k[wk]               ~> #(k+1)
    SubNat,       // Nat[s]               ~> Nat
    SubZero,      // zero[s]              ~> zero
    SubSucc,      // (succ t)[s]          ~> succ t[s]
    SubRec,       // (rec M s u t)[d]     ~> rec M[q d] s[d] u[q q d] t[d]
    SubUniv,      // Ty i[s]              ~> Ty i
    SubPi,        // (Pi A B)[s]          ~> Pi A[s] B[q s]
    SubLam,       // (fn. t)[s]           ~> fn. t[q s]
    SubApp,       // (t u)[s]             ~> t[s] u[s]
    SubBoxTy,     // ([] A)[s]            ~> [] A[^1 s]
    SubBox,       // (box t)[s]           ~> box t[^1 s]
    SubUnbox,     // (unbox n t)[s]       ~> unbox L(s,n) t[s|n]
    CompIdLeft,   // I o s                ~> s
    CompIdRight,  // s o I                ~> s
    CompAssoc,    // (s o d) o e          ~> s o (d o e)
    CompExt,      // (s, t) o d           ~> (s o d), t[d]
    CompWkExt,    // wk o (s, t)          ~> s
    CompModal,    // ^n s o d             ~> ^L(d,n) (s o d|n)
    ExtEta,       // s                    ~> (wk o s), #0[s]
    ModalEta,     // s                    ~> ^L(s,1) (s|1)
};

struct RuleInfo {
    Rule rule;
    std::string_view name;
    std::string_view equation;
    /// Expansions grow terms and are never used while normalizing.
    bool expansion;
};

const std::vector<RuleInfo>& registry();
const RuleInfo& info(Rule r);

using Node = std::variant<TermPtr, SubstPtr>;
using Path = std::vector<std::size_t>;

bool equal(const Node& a, const Node& b);
std::string debug_string(const Node& n);

/// The rewrite of `n` at its root by `r`, if the rule's pattern matches.
std::optional<Node> apply_at_root(Rule r, const Node& n);

struct Rewrite {
    Rule rule;
    Path path;
    Node result;  // the new subterm at `path`
};

/// Every single-step rewrite at every position, left-to-right rules only,
/// plus the two η expansions at the root.
std::vector<Rewrite> rewrite_step(const TermPtr& t);

/// Subterm at a path; nullopt when the path leaves the term.
std::optional<Node> at_path(const Node& n, const Path& p);
Node replace_at(const Node& n, const Path& p, const Node& replacement);

struct Trace {
    std::vector<Rewrite> left;
    std::vector<Rewrite> right;
};

struct Verdict {
    bool equiv = false;
    Trace trace;
    /// Both sides after the last round.
    TermPtr left_end;
    TermPtr right_end;
    std::size_t rounds = 0;
    std::string reason;
};

struct Limits {
    static constexpr std::size_t default_depth = 12;
    std::size_t depth = default_depth;
    /// Hard cap on rule applications per side.
    std::size_t step_budget = 200'000;
};

/// Bounded search for a joining rewrite trace. A round normalizes both sides
/// with the left-to-right rules, innermost first, then η-expands one layer at
/// every mismatch where exactly one side is a function or a box. `depth`
/// bounds the number of rounds.
Verdict bounded_equiv(const TermPtr& a, const TermPtr& b, std::size_t depth = Limits::default_depth);
Verdict bounded_equiv(const TermPtr& a, const TermPtr& b, const Limits& limits);

/// Replays a step list from `start`; returns the final term, or nullopt when
/// some step does not match its rule at its position.
std::optional<TermPtr> replay(const TermPtr& start, const std::vector<Rewrite>& steps);
bool replays(const TermPtr& a, const TermPtr& b, const Verdict& v);

/// Left-to-right normalization alone.
std::optional<TermPtr> normalize(const TermPtr& t, std::size_t step_budget = 200'000);

}  // namespace mint::oracle
