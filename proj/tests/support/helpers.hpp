#pragma once

#include <string>
#include <vector>

#include "square/rulebase.hpp"
#include "square/solver.hpp"
#include "square/story.hpp"

namespace square::testsupport {

/// Bundled lexicons, loaded once per process.
inline const Lexicons& lexicons() {
    static const Lexicons lex = load_bundled_lexicons();
    return lex;
}

/// Translate a passage and resolve its anaphora.
inline StoryProgram story_program(const std::vector<std::string>& sentences) {
    return resolve_anaphora(translate_passage(sentences, lexicons()));
}

/// Story facts plus the assembled rulebase for the tags, ready to solve.
inline Program make_program(const StoryProgram& story,
                            const std::vector<std::string>& tags = {}) {
    RuleSet rules = assemble_rulebase(tags);
    return Program{story.facts, rules.rules, story.timeline};
}

} // namespace square::testsupport
