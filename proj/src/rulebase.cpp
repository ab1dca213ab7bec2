#include "square/rulebase.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "square/data.hpp"
#include "square/errors.hpp"
#include "square/matcher.hpp"
#include "square/solver.hpp"

namespace square {

namespace {

std::string lowercase(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

const std::string& rule_text_for(const std::string& tag) {
    if (tag == kCoreTag) return data::core_rules();
    if (tag == kDirectionsTag) return data::directions_rules();
    if (tag == kPositionalTag) return data::positional_rules();
    throw Error(ErrorKind::UnknownRuleSet, "unknown rule set '" + tag + "'");
}

void collect_term_vars(const Term& term, std::set<std::string>& out) {
    if (term.kind == Term::Kind::Var) {
        out.insert(term.text);
        return;
    }
    for (const Term& arg : term.args) collect_term_vars(arg, out);
}

// Facts must be ground; goal-directed rules may leave head variables to be
// bound by the caller, so only the degenerate case is rejected statically
// (the reasoner reports floundering at run time when a negation or builtin
// is reached with unbound arguments).
void check_fact_groundness(const Rule& rule) {
    if (!rule.body.empty()) return;
    std::set<std::string> vars;
    collect_term_vars(rule.head, vars);
    if (!vars.empty()) {
        throw Error(ErrorKind::RuleFileError,
                    rule.origin + ": fact with unbound variable '" +
                        *vars.begin() + "' in " + render_rule(rule));
    }
}

void check_body_predicates(const RuleSet& set) {
    std::set<std::pair<std::string, size_t>> defined;
    for (const Rule& rule : set.rules) {
        defined.insert({rule.head.text, rule.head.args.size()});
    }
    for (const Rule& rule : set.rules) {
        for (const Literal& lit : rule.body) {
            const std::string& functor = lit.term.text;
            size_t arity = lit.term.args.size();
            if (defined.count({functor, arity})) continue;
            if (is_builtin(functor, arity)) continue;
            if (set.dynamic_preds.count({functor, arity})) continue;
            throw Error(ErrorKind::RuleFileError,
                        rule.origin + ": predicate " + functor + "/" +
                            std::to_string(arity) +
                            " is neither defined, builtin, nor dynamic");
        }
    }
}

// --- copular translation ---------------------------------------------------

const std::map<std::string, std::string>& direction_aliases() {
    static const std::map<std::string, std::string> aliases = {
        {"north_of", "north_of"},   {"south_of", "south_of"},
        {"east_of", "east_of"},     {"west_of", "west_of"},
        {"above", "above"},         {"below", "below"},
        {"left_of", "left_of"},     {"right_of", "right_of"},
        {"to_the_left_of", "left_of"},
        {"to_the_right_of", "right_of"},
    };
    return aliases;
}

const std::set<std::string>& color_words() {
    static const std::set<std::string> colors = {"red", "blue", "pink",
                                                 "yellow", "green", "white"};
    return colors;
}

const ParseTree* find_child(const ParseTree& node, const std::string& label) {
    for (const ParseTree& child : node.children) {
        if (child.label == label) return &child;
    }
    return nullptr;
}

} // namespace

std::string canonical_direction(const std::string& word) {
    const auto& aliases = direction_aliases();
    auto it = aliases.find(lowercase(word));
    return it == aliases.end() ? std::string() : it->second;
}

bool is_direction_word(const std::string& word) {
    return !canonical_direction(word).empty();
}

RuleSet assemble_rulebase(const std::vector<std::string>& task_tags) {
    for (const std::string& tag : task_tags) {
        rule_text_for(tag); // validates the tag
    }
    std::vector<std::string> order = {kCoreTag};
    for (const char* tag : {kDirectionsTag, kPositionalTag}) {
        if (std::find(task_tags.begin(), task_tags.end(), tag) != task_tags.end()) {
            order.push_back(tag);
        }
    }

    RuleSet assembled;
    std::set<std::string> seen;
    for (const std::string& tag : order) {
        RuleSet part = parse_rules(rule_text_for(tag), tag + ".rules");
        for (Rule& rule : part.rules) {
            std::string key = render_rule(rule);
            if (!seen.insert(key).second) continue; // structural duplicate
            assembled.rules.push_back(std::move(rule));
        }
        assembled.dynamic_preds.insert(part.dynamic_preds.begin(),
                                       part.dynamic_preds.end());
    }

    for (const Rule& rule : assembled.rules) check_fact_groundness(rule);
    check_body_predicates(assembled);
    return assembled;
}

std::vector<Term> translate_copular(const ParseTree& tree, int timestamp) {
    const ParseTree* clause = &tree;
    if (clause->label == "ROOT" && !clause->children.empty()) {
        clause = &clause->children.front();
    }
    const ParseTree* subject = find_child(*clause, "NP");
    const ParseTree* vp = find_child(*clause, "VP");
    if (subject == nullptr || vp == nullptr) {
        throw Error(ErrorKind::UnsupportedSyntax,
                    "copular sentence without subject and verb phrase");
    }

    std::string subject_atom = np_atom(*subject);

    if (const ParseTree* pp = find_child(*vp, "PP")) {
        if (pp->children.empty() || !pp->children.front().is_leaf()) {
            throw Error(ErrorKind::UnsupportedSyntax,
                        "copular complement without preposition");
        }
        std::string direction = canonical_direction(pp->children.front().word);
        const ParseTree* object = find_child(*pp, "NP");
        if (direction.empty() || object == nullptr) {
            throw Error(ErrorKind::UnsupportedSyntax,
                        "copular complement '" + pp->children.front().word +
                            "' is not a directional relation");
        }
        return {Term::compound("rel", {Term::atom(direction),
                                       Term::time_point(timestamp),
                                       Term::atom(subject_atom),
                                       Term::atom(np_atom(*object))})};
    }

    if (const ParseTree* adjp = find_child(*vp, "ADJP")) {
        if (adjp->children.empty() || !adjp->children.front().is_leaf()) {
            throw Error(ErrorKind::UnsupportedSyntax, "empty adjective phrase");
        }
        std::string adjective = lowercase(adjp->children.front().word);
        if (color_words().count(adjective) == 0) {
            throw Error(ErrorKind::UnsupportedSyntax,
                        "adjective '" + adjective + "' is not a known color");
        }
        return {Term::compound("attr", {Term::atom("color"),
                                        Term::time_point(timestamp),
                                        Term::atom(subject_atom),
                                        Term::atom(adjective)})};
    }

    throw Error(ErrorKind::UnsupportedSyntax,
                "copular sentence needs a directional or color complement");
}

} // namespace square
