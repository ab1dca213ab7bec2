#include <string>
#include <vector>

#include "doctest.h"
#include "square/errors.hpp"
#include "square/grammar.hpp"
#include "square/parse_tree.hpp"
#include "square/token.hpp"
#include "support/helpers.hpp"

using namespace square;
using testsupport::lexicons;

namespace {

std::string parse_to_string(const std::string& sentence) {
    std::vector<Token> tokens = tokenize(sentence, lexicons().words);
    return write_bracketed(parse_sentence(tokens));
}

} // namespace

TEST_CASE("tokenizer tags known words and defaults the rest") {
    std::vector<Token> tokens =
        tokenize("Mary moved to the bedroom.", lexicons().words);
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].text == "Mary");
    CHECK(tokens[0].pos == "NNP");  // capitalized unknown
    CHECK(tokens[1].pos == "VBD");
    CHECK(tokens[1].lemma == "move");
    CHECK(tokens[2].pos == "IN");
    CHECK(tokens[3].pos == "DT");
    CHECK(tokens[4].pos == "NN");  // lowercase unknown
    CHECK(tokens[5].pos == ".");
    CHECK(tokens[5].text == ".");
}

TEST_CASE("multiword units merge into single tokens") {
    std::vector<Token> tokens =
        tokenize("Mary picked up the football there.", lexicons().words);
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[1].text == "picked_up");
    CHECK(tokens[1].lemma == "pick_up");
    CHECK(tokens[1].pos == "VBD");
    CHECK(tokens[4].text == "there");
    CHECK(tokens[4].pos == "RB");

    std::vector<Token> dir =
        tokenize("The office is north of the bedroom.", lexicons().words);
    REQUIRE(dir.size() == 8);
    CHECK(dir[3].text == "north_of");
    CHECK(dir[3].pos == "IN");

    std::vector<Token> longer = tokenize(
        "The triangle is to the left of the square.", lexicons().words);
    REQUIRE(longer.size() == 8);
    CHECK(longer[3].text == "to_the_left_of");
    CHECK(longer[3].pos == "IN");
}

TEST_CASE("blank input is an error") {
    CHECK_THROWS_AS(tokenize("", lexicons().words), Error);
    CHECK_THROWS_AS(tokenize("   ", lexicons().words), Error);
    try {
        tokenize("", lexicons().words);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptySentence);
    }
}

TEST_CASE("declaratives parse to the expected shapes") {
    CHECK(parse_to_string("Mary moved to the bedroom.") ==
          "(ROOT (S (NP (NNP Mary)) (VP (VBD moved) (PP (IN to) (NP (DT the) "
          "(NN bedroom)))) (. .)))");
    CHECK(parse_to_string("Mary got the milk there.") ==
          "(ROOT (S (NP (NNP Mary)) (VP (VBD got) (NP (DT the) (NN milk)) "
          "(ADVP (RB there))) (. .)))");
    CHECK(parse_to_string("The office is north of the bedroom.") ==
          "(ROOT (S (NP (DT The) (NN office)) (VP (VBZ is) (PP (IN north_of) "
          "(NP (DT the) (NN bedroom)))) (. .)))");
}

TEST_CASE("questions parse to SBARQ clauses") {
    CHECK(parse_to_string("Where is Mary?") ==
          "(ROOT (SBARQ (WHADVP (WRB Where)) (SQ (VBZ is) (NP (NNP Mary))) "
          "(. ?)))");
    CHECK(parse_to_string("Where was the football before the hallway?") ==
          "(ROOT (SBARQ (WHADVP (WRB Where)) (SQ (VBD was) (NP (DT the) "
          "(NN football)) (PP (IN before) (NP (DT the) (NN hallway)))) "
          "(. ?)))");
    CHECK(parse_to_string("What is north of the bedroom?") ==
          "(ROOT (SBARQ (WHNP (WP What)) (SQ (VBZ is) (PP (IN north_of) "
          "(NP (DT the) (NN bedroom)))) (. ?)))");
    CHECK(parse_to_string("What is the bathroom east of?") ==
          "(ROOT (SBARQ (WHNP (WP What)) (SQ (VBZ is) (NP (DT the) "
          "(NN bathroom)) (PP (IN east_of))) (. ?)))");
    CHECK(parse_to_string("Is the triangle above the pink rectangle?") ==
          "(ROOT (SBARQ (SQ (VBZ Is) (NP (DT the) (NN triangle)) (PP (IN "
          "above) (NP (DT the) (JJ pink) (NN rectangle)))) (. ?)))");
}

TEST_CASE("every parsed sentence round-trips through bracketed text") {
    for (const char* sentence :
         {"Mary moved to the bedroom.", "Mary got the milk there.",
          "Mary travelled to the hallway.", "Mary discarded the milk there.",
          "Steve tossed the ball to the garden.",
          "The office is north of the bedroom.", "Where is the milk?",
          "What is the bathroom east of?"}) {
        std::vector<Token> tokens = tokenize(sentence, lexicons().words);
        ParseTree tree = parse_sentence(tokens);
        CHECK(read_bracketed(write_bracketed(tree)) == tree);
    }
}

TEST_CASE("unparseable sentences raise UnsupportedSyntax") {
    for (const char* bad :
         {"Mary Mary.", "To the bedroom.", "Is the triangle blue?",
          "Mary moved the.", "moved."}) {
        std::vector<Token> tokens = tokenize(bad, lexicons().words);
        CHECK_THROWS_AS(parse_sentence(tokens), Error);
    }
    try {
        parse_sentence(tokenize("Is the triangle blue?", lexicons().words));
        FAIL("expected UnsupportedSyntax");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedSyntax);
    }
}
