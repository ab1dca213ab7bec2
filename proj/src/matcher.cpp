#include "square/matcher.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "square/errors.hpp"

namespace square {

std::string np_atom(const ParseTree& node) {
    std::string out;
    for (const std::string& word : tree_leaves(node)) {
        if (!out.empty()) out += '_';
        for (char c : word) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

namespace {

const std::set<std::string> kLocativeRoles = {
    "Initial_Location", "Source", "Destination", "Location",
};

std::string lowercase(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

/// Role functor for grounded facts: Agent -> agent, Initial_Location -> source.
std::string role_functor(const std::string& role) {
    if (role == "Initial_Location" || role == "Source") return "source";
    if (role == "Destination") return "destination";
    return lowercase(role);
}

bool is_verb_leaf(const ParseTree& node) {
    return node.is_leaf() && node.label.rfind("VB", 0) == 0;
}

bool is_there_advp(const ParseTree& node) {
    return node.label == "ADVP" && node.children.size() == 1 &&
           node.children[0].is_leaf() && lowercase(node.children[0].word) == "there";
}

const ParseTree* find_np_child(const ParseTree& pp) {
    for (const ParseTree& child : pp.children) {
        if (child.label == "NP") return &child;
    }
    return nullptr;
}

std::string pp_head(const ParseTree& pp) {
    for (const ParseTree& child : pp.children) {
        if (child.is_leaf() && child.label == "IN") return lowercase(child.word);
    }
    return "";
}

bool is_locative(const SyntaxElement& el) {
    return el.kind == SyntaxElement::Kind::RoleSlot && kLocativeRoles.count(el.role) > 0;
}

/// One left-to-right matching attempt over a constituent subtree. Pattern
/// elements consume whole constituents; anything else is descended into or,
/// for leaves, skipped.
struct Walker {
    const std::vector<SyntaxElement>& pattern;
    const std::string& verb_text;
    std::size_t p = 0;
    std::size_t counter = 0;
    std::vector<RoleBinding> bindings;
    std::vector<std::size_t> span;

    void bind(const std::string& role, const std::string& value) {
        bindings.push_back(RoleBinding{role, value});
    }

    void walk(const ParseTree& node) {
        std::size_t idx = counter++;
        if (p >= pattern.size()) return;
        const SyntaxElement& el = pattern[p];

        if (el.kind == SyntaxElement::Kind::Verb) {
            if (is_verb_leaf(node) && (verb_text.empty() || node.word == verb_text)) {
                ++p;
                span.push_back(idx);
                return;
            }
        } else if (el.kind == SyntaxElement::Kind::RoleSlot) {
            if (node.label == el.phrase_tag) {
                bind(el.role, np_atom(node));
                ++p;
                span.push_back(idx);
                return;
            }
            if (is_locative(el) && is_there_advp(node)) {
                bind(el.role, "there_ref");
                ++p;
                span.push_back(idx);
                return;
            }
        } else {   // preposition constraint
            if (node.label == "PP" && p + 1 < pattern.size() &&
                pattern[p + 1].kind == SyntaxElement::Kind::RoleSlot) {
                const std::string head = pp_head(node);
                const ParseTree* object = find_np_child(node);
                if (object != nullptr &&
                    std::find(el.preps.begin(), el.preps.end(), head) != el.preps.end()) {
                    ++p;                       // constraint satisfied by the PP head
                    span.push_back(idx);
                    bind(pattern[p].role, np_atom(*object));
                    ++p;                       // slot bound inside the same PP
                    span.push_back(idx);
                    return;
                }
            }
            // "there" can stand in for prep + locative slot together.
            if (p + 1 < pattern.size() && is_locative(pattern[p + 1]) &&
                is_there_advp(node)) {
                ++p;
                bind(pattern[p].role, "there_ref");
                ++p;
                span.push_back(idx);
                return;
            }
        }

        if (node.is_leaf()) return;   // interposed word: skip
        for (const ParseTree& child : node.children) {
            walk(child);
            if (p >= pattern.size()) return;
        }
    }

    /// Trailing pattern elements may only be prepositions or locative slots;
    /// unmatched locatives ground to unknown.
    bool finish() {
        while (p < pattern.size()) {
            const SyntaxElement& el = pattern[p];
            if (el.kind == SyntaxElement::Kind::Prep) {
                ++p;
                continue;
            }
            if (is_locative(el)) {
                bind(el.role, "unknown");
                ++p;
                continue;
            }
            return false;
        }
        return true;
    }
};

std::string lemma_of(const std::string& word, const WordLexicon& lexicon) {
    std::string lower = lowercase(word);
    if (const auto* entry = lexicon.lookup(lower)) return entry->first;
    std::string spaced = lower;
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    if (spaced != lower) {
        if (const auto* entry = lexicon.lookup(spaced)) return entry->first;
    }
    return lower;
}

bool find_verb_path(const ParseTree& node, const Token& verb,
                    std::vector<const ParseTree*>& path) {
    path.push_back(&node);
    if (node.is_leaf() && node.label.rfind("VB", 0) == 0 && node.word == verb.text) {
        return true;
    }
    for (const ParseTree& child : node.children) {
        if (find_verb_path(child, verb, path)) return true;
    }
    path.pop_back();
    return false;
}

void collect_verb_leaves(const ParseTree& node, std::vector<const ParseTree*>& out) {
    if (is_verb_leaf(node)) out.push_back(&node);
    for (const ParseTree& child : node.children) collect_verb_leaves(child, out);
}

bool match_at_or_above(const ParseTree& tree, const std::vector<SyntaxElement>& pattern,
                       const Token& verb, MatchResult& out) {
    std::vector<const ParseTree*> path;
    if (!find_verb_path(tree, verb, path) || path.size() < 2) return false;
    // path.back() is the verb leaf; try its parent, then each ancestor up to
    // and including the root.
    for (std::size_t i = path.size() - 1; i-- > 0;) {
        if (match_pattern(*path[i], pattern, verb.text, out)) return true;
    }
    return false;
}

} // namespace

bool match_pattern(const ParseTree& root, const std::vector<SyntaxElement>& pattern,
                   const std::string& verb_text, MatchResult& out) {
    Walker walker{pattern, verb_text, 0, 0, {}, {}};
    walker.walk(root);
    if (!walker.finish()) return false;
    out.bindings = std::move(walker.bindings);
    out.matched_span = std::move(walker.span);
    return true;
}

std::vector<RoleBinding> get_matching(const ParseTree& root,
                                      const std::vector<SyntaxElement>& pattern,
                                      const std::string& verb_text) {
    MatchResult result;
    if (!match_pattern(root, pattern, verb_text, result)) return {};
    return result.bindings;
}

std::vector<RoleBinding> get_thematic_roles(const ParseTree& tree,
                                            const std::vector<SyntaxElement>& pattern,
                                            const Token& verb) {
    MatchResult result;
    if (!match_at_or_above(tree, pattern, verb, result)) return {};
    return result.bindings;
}

std::vector<Term> instantiate_semantics(const std::vector<RoleBinding>& bindings,
                                        const VerbFrame& frame,
                                        int timestamp, int& event_counter) {
    const int base = event_counter;
    event_counter += frame.sub_event_count;

    auto bound_value = [&](const std::string& role) -> const std::string* {
        for (const RoleBinding& b : bindings) {
            if (b.role == role) return &b.value;
        }
        return nullptr;
    };
    auto role_value = [&](const std::string& role) -> std::string {
        if (const std::string* v = bound_value(role)) return *v;
        if (kLocativeRoles.count(role)) return "unknown";
        throw Error(ErrorKind::InstantiationError,
                    "semantic template names role '" + role +
                        "' with no binding and no unknown fallback");
    };
    auto event_atom = [&](int idx) { return Term::atom("e" + std::to_string(base + idx)); };
    auto phase_term = [&](const TemplateArg& arg) {
        return Term::compound(arg.text, {event_atom(arg.event)});
    };
    auto role_term = [&](const std::string& role, const std::string& value) {
        return Term::compound(role_functor(role), {Term::atom(value)});
    };

    std::vector<Term> facts;
    for (const SemanticTemplate& sem : frame.semantics) {
        std::string pred = sem.negated ? "neg_" + sem.pred : sem.pred;
        std::vector<Term> args{Term::time_point(timestamp)};

        if (sem.pred == "path_rel") {
            // path_rel(T, phase, source|destination(Loc), theme(Th)):
            // constants like ch_of_loc ride in the template but not the fact.
            const TemplateArg* phase = nullptr;
            const TemplateArg* locative = nullptr;
            const TemplateArg* theme = nullptr;
            for (const TemplateArg& arg : sem.args) {
                if (arg.kind == TemplateArg::Kind::Phase && !phase) phase = &arg;
                if (arg.kind == TemplateArg::Kind::Role) {
                    if (kLocativeRoles.count(arg.text)) {
                        if (!locative) locative = &arg;
                    } else if (!theme) {
                        theme = &arg;
                    }
                }
            }
            if (!phase || !locative || !theme) {
                throw Error(ErrorKind::InstantiationError,
                            "path_rel template needs a phase, a locative role, "
                            "and a theme role");
            }
            args.push_back(phase_term(*phase));
            args.push_back(role_term(locative->text, role_value(locative->text)));
            args.push_back(role_term(theme->text, role_value(theme->text)));
        } else if (sem.pred == "equals") {
            // The bound side's value stands in for an unbound side:
            // equals(t1, agent(steve), initial_location(steve)).
            std::vector<std::pair<std::string, std::string>> sides;
            std::string first_bound;
            for (const TemplateArg& arg : sem.args) {
                if (arg.kind != TemplateArg::Kind::Role) continue;
                std::string value = role_value(arg.text);
                if (first_bound.empty() && value != "unknown") first_bound = value;
                sides.emplace_back(arg.text, value);
            }
            for (auto& [role, value] : sides) {
                if (value == "unknown" && !first_bound.empty()) value = first_bound;
                // equals keeps the raw role name: initial_location, not source.
                args.push_back(Term::compound(lowercase(role), {Term::atom(value)}));
            }
        } else {
            const bool point_predicate = sem.pred == "exert_force";
            for (const TemplateArg& arg : sem.args) {
                switch (arg.kind) {
                    case TemplateArg::Kind::Phase:
                        if (!point_predicate) args.push_back(phase_term(arg));
                        break;
                    case TemplateArg::Kind::Event:
                        args.push_back(Term::compound("event", {event_atom(arg.event)}));
                        break;
                    case TemplateArg::Kind::Role:
                        args.push_back(role_term(arg.text, role_value(arg.text)));
                        break;
                    case TemplateArg::Kind::Const:
                        args.push_back(Term::atom(arg.text));
                        break;
                }
            }
        }
        facts.push_back(Term::compound(pred, std::move(args)));
    }
    return facts;
}

SentenceSemantics get_sentence_semantics(const ParseTree& tree,
                                         const WordLexicon& words,
                                         const FrameLexicon& frames,
                                         int timestamp, int& event_counter) {
    std::vector<const ParseTree*> verbs;
    collect_verb_leaves(tree, verbs);
    if (verbs.empty()) {
        throw Error(ErrorKind::NoVerb, "sentence has no verb leaf");
    }

    SentenceSemantics out;
    for (const ParseTree* leaf : verbs) {
        Token verb{leaf->word, lemma_of(leaf->word, words), leaf->label};

        MatchResult best;
        const VerbFrame* best_frame = nullptr;
        for (const std::string& class_id : frames.get_vn_classes(verb.lemma)) {
            const std::vector<VerbFrame>& class_frames = frames.get_vn_frames(class_id);
            for (std::size_t fi = 0; fi < class_frames.size(); ++fi) {
                MatchResult candidate;
                if (!match_at_or_above(tree, class_frames[fi].pattern, verb, candidate)) {
                    continue;
                }
                candidate.verb_lemma = verb.lemma;
                candidate.class_id = class_id;
                candidate.frame_index = fi;
                // Keep the match consuming the most constituents; earlier
                // classes and frames win ties.
                if (!best_frame ||
                    candidate.matched_span.size() > best.matched_span.size()) {
                    best = std::move(candidate);
                    best_frame = &class_frames[fi];
                }
            }
        }
        if (!best_frame) {
            out.warnings.push_back("no frame matched verb '" + verb.lemma + "'");
            continue;
        }
        std::vector<Term> facts =
            instantiate_semantics(best.bindings, *best_frame, timestamp, event_counter);
        out.facts.insert(out.facts.end(), facts.begin(), facts.end());
        out.matches.push_back(std::move(best));
    }
    return out;
}

} // namespace square
