#ifndef SQUARE_SOLVER_HPP
#define SQUARE_SOLVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "square/clause.hpp"
#include "square/term.hpp"

namespace square {

/// One node of a proof tree. Fact and builtin nodes are leaves; a naf node
/// records a finitely failed subgoal and renders as "not <goal>".
struct JustificationNode {
    enum class Kind { Fact, Rule, Builtin, NafSuccess };

    Kind kind = Kind::Fact;
    Term goal;                 // ground instance as proven
    std::string rule_origin;   // Kind::Rule only: defining clause "file:line"
    std::vector<JustificationNode> children;
};

struct Answer {
    Env bindings;   // query variable -> ground term
    JustificationNode justification;
};

struct Limits {
    std::size_t max_depth = 10000;   // call depth budget; beyond it: DepthExceeded
    std::size_t max_answers = 0;     // stop after this many answers; 0 = collect all
};

/// A solvable logic program: ground story facts, rules, and the story
/// timeline consulted by the time builtins.
struct Program {
    std::vector<Term> facts;       // ground, in emission order
    std::vector<Rule> rules;       // clause order as loaded
    std::vector<Term> timeline;    // ascending time points t1..tn
};

/// Ascending, deduplicated time points found anywhere inside the facts.
std::vector<Term> timeline_from_facts(const std::vector<Term>& facts);

/// True if functor/arity is one of the built-in predicates.
bool is_builtin(const std::string& functor, std::size_t arity);

/// Goal-directed resolution: depth-first search in clause order with leftmost
/// literal selection; negation as failure by sub-proof; a variant loop check
/// fails any positive goal that recurs on the current call stack. Answers are
/// returned in derivation order with duplicate bindings removed.
///
/// Throws Error(DepthExceeded) past limits.max_depth and Error(Floundering)
/// when negation or a builtin meets an unbound required argument.
std::vector<Answer> solve(const Term& query, const Program& program,
                          const Limits& limits = {});

/// Evaluate one builtin goal, returning each solution as a full variable
/// environment. The meta-call builtins (filter_times,
/// filtered_possession_times) consult the whole program.
std::vector<Env> eval_builtin(const Term& goal, const Program& program);

/// Render a proof tree:
///   BEGIN JUSTIFICATION
///     <goal>
///       <subgoal>
///   END JUSTIFICATION
/// Two-space indentation per call depth (the root sits at one level).
/// max_depth limits how many levels are shown; 0 means unlimited. The
/// default of 2 prints the query goal and its immediate subgoals.
std::string render_justification(const JustificationNode& node,
                                 std::size_t max_depth = 2);

} // namespace square

#endif
