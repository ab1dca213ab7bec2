#ifndef SQUARE_CLAUSE_HPP
#define SQUARE_CLAUSE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "square/term.hpp"

namespace square {

struct Literal {
    bool negated = false;   // negation as failure
    Term term;
    bool operator==(const Literal& other) const {
        return negated == other.negated && term == other.term;
    }
};

struct Rule {
    Term head;
    std::vector<Literal> body;   // empty for facts
    std::string origin;          // "file:line" for diagnostics
    bool operator==(const Rule& other) const { return head == other.head && body == other.body; }
};

/// Parsed rule file: clauses plus `:- dynamic(p/N).` declarations naming
/// predicates that may appear as story facts without clause definitions.
struct RuleSet {
    std::vector<Rule> rules;
    std::set<std::pair<std::string, size_t>> dynamic_preds;
};

/// Parse one term from text, e.g. "path_rel(t4, start(e0), source(X))".
/// Trailing input is an error. Variables start uppercase or '_'; tN is a
/// time point; [a, b | T] is list syntax.
Term parse_term(const std::string& text);

/// Parse clause-file text:  head :- lit1, not lit2.  with % comments.
RuleSet parse_rules(const std::string& text, const std::string& origin_name);

/// Render a rule back to clause syntax (one line, trailing period).
std::string render_rule(const Rule& rule);

} // namespace square

#endif
