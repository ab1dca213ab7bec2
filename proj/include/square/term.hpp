#ifndef SQUARE_TERM_HPP
#define SQUARE_TERM_HPP

#include <map>
#include <string>
#include <vector>

namespace square {

/// First-order term. Lists are cons cells: compound "."/2 terminated by the
/// atom "[]"; timeline points are a distinct kind rendered t1, t2, ...
struct Term {
    enum class Kind { Atom, Var, Time, Compound };

    Kind kind = Kind::Atom;
    std::string text;         // atom name, variable name, or functor
    int time = 0;             // Kind::Time index (1-based)
    std::vector<Term> args;   // Kind::Compound arguments

    static Term atom(std::string name) {
        Term t;
        t.kind = Kind::Atom;
        t.text = std::move(name);
        return t;
    }
    static Term var(std::string name) {
        Term t;
        t.kind = Kind::Var;
        t.text = std::move(name);
        return t;
    }
    static Term time_point(int index) {
        Term t;
        t.kind = Kind::Time;
        t.time = index;
        return t;
    }
    static Term compound(std::string functor, std::vector<Term> args) {
        Term t;
        t.kind = Kind::Compound;
        t.text = std::move(functor);
        t.args = std::move(args);
        return t;
    }
    static Term nil() { return atom("[]"); }
    static Term cons(Term head, Term tail) {
        return compound(".", {std::move(head), std::move(tail)});
    }
    static Term list(const std::vector<Term>& items);

    bool is_nil() const { return kind == Kind::Atom && text == "[]"; }
    bool is_cons() const { return kind == Kind::Compound && text == "." && args.size() == 2; }

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }
};

/// Render in canonical syntax: functor(a, b), lists as [a, b, c], times tN.
std::string render_term(const Term& term);

/// Variable substitution built during resolution.
using Env = std::map<std::string, Term>;

/// Follow variable bindings until a non-variable or unbound variable.
const Term& walk(const Term& term, const Env& env);

/// Apply the environment throughout the term.
Term resolve(const Term& term, const Env& env);

/// Unify two terms, extending env in place. Returns false (env unspecified)
/// on mismatch; callers backtrack by restoring a copy.
bool unify(const Term& a, const Term& b, Env& env);

bool is_ground(const Term& term, const Env& env);

/// Canonical form with variables renumbered _0, _1, ... in first-occurrence
/// order; two terms are variants iff their canonical strings match.
std::string canonical_variant(const Term& term, const Env& env);

/// Collect list elements; returns false if the term is not a proper list.
bool list_elements(const Term& term, const Env& env, std::vector<Term>& out);

} // namespace square

#endif
