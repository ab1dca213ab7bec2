#ifndef SQUARE_QUESTION_HPP
#define SQUARE_QUESTION_HPP

#include <map>
#include <string>
#include <vector>

#include "square/parse_tree.hpp"
#include "square/solver.hpp"
#include "square/story.hpp"
#include "square/term.hpp"

namespace square {

enum class QuestionTag {
    WherePerson,       // Where is Mary?
    WhereObject,       // Where is the milk?
    WhereObjectBefore, // Where was the football before the hallway?
    WhatDirection,     // What is north of the bedroom? / What is X north of?
    YesNoPositional,   // Is the triangle above the pink rectangle?
};

/// A classified question with its extracted slots.
struct Question {
    QuestionTag tag;
    std::string entity;     // asked person/object, or the left operand
    std::string reference;  // before-room, direction anchor, or right operand
    std::string direction;  // canonical direction for the direction kinds
    // WhatDirection only: true for "What is DIR of X?" (the unknown is the
    // left operand), false for "What is X DIR of?" (the unknown is right).
    bool unknown_on_left = false;
};

/// The variable name generate_query uses for the asked-for value.
inline constexpr const char* kAnswerVar = "Answer";

/// Classifies a parsed question against the story's entities.  Throws
/// UnsupportedQuestion for any tree outside the recognized patterns.
Question classify_question(const ParseTree& tree,
                           const std::map<std::string, EntityKind>& entities);

/// Builds the executable goal for a classified question:
///   WherePerson        -> get_location(person, Answer)
///   WhereObject        -> get_object_location(object, Answer)
///   WhereObjectBefore  -> get_object_location_before(object, ref, Answer)
///   WhatDirection      -> get_direction(dir, Answer, anchor) or
///                         get_direction(dir, anchor, Answer)
///   YesNoPositional    -> entailed(dir, left, right)   (ground)
Term generate_query(const Question& question);

/// Turns solver answers into the final answer string.  Where/what questions
/// take the first answer's binding and strip a leading "the_" ("the_hallway"
/// -> "hallway"); no answers is a NoAnswer error.  Yes/no questions map any
/// answer to "yes" and none to "no".
std::string extract_answer(const Question& question,
                           const std::vector<Answer>& answers);

} // namespace square

#endif // SQUARE_QUESTION_HPP
