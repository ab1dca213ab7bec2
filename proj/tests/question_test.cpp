#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "square/errors.hpp"
#include "square/grammar.hpp"
#include "square/question.hpp"
#include "square/token.hpp"
#include "support/helpers.hpp"

using namespace square;
using testsupport::lexicons;
using testsupport::make_program;
using testsupport::story_program;

namespace {

using Entities = std::map<std::string, EntityKind>;

Question classify(const std::string& sentence, const Entities& entities) {
    ParseTree tree = parse_sentence(tokenize(sentence, lexicons().words));
    return classify_question(tree, entities);
}

Answer answer_with(const std::string& value) {
    Answer a;
    a.bindings.emplace(kAnswerVar, Term::atom(value));
    return a;
}

} // namespace

TEST_CASE("where-questions split on the subject's entity kind") {
    Entities entities{{"mary", EntityKind::Person},
                      {"the_milk", EntityKind::Object}};

    Question person = classify("Where is Mary?", entities);
    CHECK(person.tag == QuestionTag::WherePerson);
    CHECK(person.entity == "mary");
    CHECK(render_term(generate_query(person)) == "get_location(mary, Answer)");

    Question object = classify("Where is the milk?", entities);
    CHECK(object.tag == QuestionTag::WhereObject);
    CHECK(object.entity == "the_milk");
    CHECK(render_term(generate_query(object)) ==
          "get_object_location(the_milk, Answer)");

    // An unseen bare proper noun reads as a person; an unseen common noun
    // phrase reads as an object.
    CHECK(classify("Where is Daniel?", {}).tag == QuestionTag::WherePerson);
    CHECK(classify("Where is the football?", {}).tag ==
          QuestionTag::WhereObject);
}

TEST_CASE("a before-modifier asks for the previous location") {
    Question q = classify("Where was the football before the hallway?", {});
    CHECK(q.tag == QuestionTag::WhereObjectBefore);
    CHECK(q.entity == "the_football");
    CHECK(q.reference == "the_hallway");
    CHECK(render_term(generate_query(q)) ==
          "get_object_location_before(the_football, the_hallway, Answer)");
}

TEST_CASE("direction questions place the unknown on either side") {
    Question left = classify("What is north of the bedroom?", {});
    CHECK(left.tag == QuestionTag::WhatDirection);
    CHECK(left.unknown_on_left);
    CHECK(left.reference == "the_bedroom");
    CHECK(left.direction == "north_of");
    CHECK(render_term(generate_query(left)) ==
          "get_direction(north_of, Answer, the_bedroom)");

    Question right = classify("What is the bathroom east of?", {});
    CHECK(right.tag == QuestionTag::WhatDirection);
    CHECK_FALSE(right.unknown_on_left);
    CHECK(right.entity == "the_bathroom");
    CHECK(right.direction == "east_of");
    CHECK(render_term(generate_query(right)) ==
          "get_direction(east_of, the_bathroom, Answer)");
}

TEST_CASE("bare positional questions are yes/no entailment checks") {
    Question q = classify("Is the triangle above the pink rectangle?", {});
    CHECK(q.tag == QuestionTag::YesNoPositional);
    CHECK(q.entity == "the_triangle");
    CHECK(q.reference == "the_pink_rectangle");
    CHECK(q.direction == "above");
    CHECK(render_term(generate_query(q)) ==
          "entailed(above, the_triangle, the_pink_rectangle)");
}

TEST_CASE("unrecognized question shapes are rejected") {
    // A why-question parses nowhere in the grammar, so hand it a tree.
    ParseTree why = read_bracketed(
        "(ROOT (SBARQ (WHADVP (WRB Why)) (SQ (VBD did) (NP (NNP Mary)) "
        "(VP (VB leave))) (. ?)))");
    try {
        classify_question(why, {});
        FAIL("expected UnsupportedQuestion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedQuestion);
    }

    // A declarative clause is not a question at all.
    ParseTree decl =
        parse_sentence(tokenize("Mary moved to the bedroom.", lexicons().words));
    try {
        classify_question(decl, {});
        FAIL("expected UnsupportedQuestion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedQuestion);
    }

    // A 'where' question modified by anything but 'before'.
    ParseTree where_in = read_bracketed(
        "(ROOT (SBARQ (WHADVP (WRB Where)) (SQ (VBZ is) (NP (DT the) (NN milk)) "
        "(PP (IN in) (NP (DT the) (NN box)))) (. ?)))");
    try {
        classify_question(where_in, {});
        FAIL("expected UnsupportedQuestion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedQuestion);
    }
}

TEST_CASE("extract_answer strips the leading article and maps yes/no") {
    Question object{QuestionTag::WhereObject, "the_milk", "", "", false};
    CHECK(extract_answer(object, {answer_with("the_hallway")}) == "hallway");
    CHECK(extract_answer(object, {answer_with("garden")}) == "garden");
    CHECK(extract_answer(object,
                         {answer_with("the_office"), answer_with("the_park")}) ==
          "office");

    try {
        extract_answer(object, {});
        FAIL("expected NoAnswer");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoAnswer);
    }

    Question yesno{QuestionTag::YesNoPositional, "a", "b", "above", false};
    CHECK(extract_answer(yesno, {}) == "no");
    Answer bare;  // a ground query binds nothing
    CHECK(extract_answer(yesno, {bare}) == "yes");
}

TEST_CASE("classified questions run against a translated story") {
    StoryProgram story = story_program({
        "Mary moved to the bedroom.",
        "Mary got the milk there.",
        "Mary travelled to the hallway.",
        "Mary discarded the milk there.",
        "Mary journeyed to the bathroom.",
    });
    Question q = classify("Where is the milk?", story.entities);
    std::vector<Answer> answers =
        solve(generate_query(q), make_program(story));
    CHECK(extract_answer(q, answers) == "hallway");
}
