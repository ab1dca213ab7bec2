#ifndef SQUARE_MATCHER_HPP
#define SQUARE_MATCHER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "square/frames.hpp"
#include "square/parse_tree.hpp"
#include "square/term.hpp"
#include "square/token.hpp"

namespace square {

/// A thematic role grounded to a normalized noun-phrase atom (the_milk),
/// the anaphora placeholder there_ref, or the atom unknown.
struct RoleBinding {
    std::string role;
    std::string value;
    bool operator==(const RoleBinding& other) const {
        return role == other.role && value == other.value;
    }
};

struct MatchResult {
    std::string verb_lemma;
    std::string class_id;
    std::size_t frame_index = 0;
    std::vector<RoleBinding> bindings;       // pattern order, every role-slot covered
    std::vector<std::size_t> matched_span;   // preorder indices of consumed constituents
};

/// Per-sentence matching outcome: grounded facts in template order plus the
/// retained match per verb occurrence. A verb that no frame matches adds a
/// warning instead of failing the sentence (copular fallback may still apply).
struct SentenceSemantics {
    std::vector<Term> facts;
    std::vector<MatchResult> matches;
    std::vector<std::string> warnings;
};

/// For every verb leaf: walk its classes and frames, find the thematic-role
/// bindings, keep the best match (most constituents consumed; ties broken by
/// class order then frame order), and ground its semantics at the timestamp.
/// event_counter numbers sub-events continuously across a story so that no
/// two sentences share an event id. Throws Error{NoVerb} when the tree has
/// no verb leaf at all.
SentenceSemantics get_sentence_semantics(const ParseTree& tree,
                                         const WordLexicon& words,
                                         const FrameLexicon& frames,
                                         int timestamp, int& event_counter);

/// Starting from the verb's parent constituent, try to match the pattern;
/// on failure ascend one level and retry, up to and including the root.
/// Returns the bindings of the first level that matches; empty = no match.
std::vector<RoleBinding> get_thematic_roles(const ParseTree& tree,
                                            const std::vector<SyntaxElement>& pattern,
                                            const Token& verb);

/// Left-to-right partial match of the pattern against root's constituents:
/// role-slots consume NP nodes (binding their normalized head), preposition
/// constraints consume a PP whose head lemma is licensed and bind the slot
/// that follows to the PP's object, interposed constituents are skipped, and
/// a trailing locative slot may be satisfied by ADVP "there" (binding
/// there_ref) or left unbound. Empty result = no match. verb_text pins the
/// Normalizes a noun phrase subtree to an entity atom: leaf words
/// lowercased and joined with underscores ("the milk" -> the_milk).
std::string np_atom(const ParseTree& node);

/// verb marker to one specific leaf; empty accepts any verb leaf.
std::vector<RoleBinding> get_matching(const ParseTree& root,
                                      const std::vector<SyntaxElement>& pattern,
                                      const std::string& verb_text = "");

/// Detailed variant of get_matching used by the best-match filter.
bool match_pattern(const ParseTree& root, const std::vector<SyntaxElement>& pattern,
                   const std::string& verb_text, MatchResult& out);

/// Ground the frame's semantic templates: first argument is the timestamp,
/// phase terms start/during/end(eN) ride second (elided for exert_force),
/// roles are wrapped in role functors (agent(mary)), unbound roles ground to
/// unknown, and negated templates emit neg_-prefixed predicates. path_rel is
/// shaped as path_rel(T, phase, source|destination(Loc), theme(Th)); equals
/// copies the bound side's value to an unbound side. Sub-events take ids
/// event_counter, event_counter+1, ... and the counter advances.
/// Throws Error{InstantiationError} if a template names a role that is
/// neither bound nor groundable to unknown.
std::vector<Term> instantiate_semantics(const std::vector<RoleBinding>& bindings,
                                        const VerbFrame& frame,
                                        int timestamp, int& event_counter);

} // namespace square

#endif
