#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "square/errors.hpp"
#include "square/story.hpp"
#include "support/helpers.hpp"

using namespace square;
using testsupport::lexicons;
using testsupport::story_program;

namespace {

const std::vector<std::string> kGoldenStory = {
    "Mary moved to the bedroom.",
    "Mary got the milk there.",
    "Mary travelled to the hallway.",
    "Mary discarded the milk there.",
    "Mary journeyed to the bathroom.",
};

std::vector<std::string> rendered_facts(const StoryProgram& program) {
    std::vector<std::string> out;
    for (const Term& fact : program.facts) out.push_back(render_term(fact));
    return out;
}

bool has_fact(const StoryProgram& program, const std::string& text) {
    std::vector<std::string> facts = rendered_facts(program);
    return std::find(facts.begin(), facts.end(), text) != facts.end();
}

} // namespace

TEST_CASE("the golden story translates completely") {
    StoryProgram program = story_program(kGoldenStory);
    CHECK(program.warnings.empty());
    REQUIRE(program.timeline.size() == 5);
    for (size_t i = 0; i < 5; ++i) {
        CHECK(render_term(program.timeline[i]) == "t" + std::to_string(i + 1));
    }
    CHECK(program.facts.size() == 22);
    CHECK(program.matches.size() == 5);

    REQUIRE(program.entities.count("mary") == 1);
    CHECK(program.entities.at("mary") == EntityKind::Person);
    REQUIRE(program.entities.count("the_milk") == 1);
    CHECK(program.entities.at("the_milk") == EntityKind::Object);
    for (const char* place :
         {"the_bedroom", "the_hallway", "the_bathroom"}) {
        REQUIRE(program.entities.count(place) == 1);
        CHECK(program.entities.at(place) == EntityKind::Location);
    }

    // The anaphoric sources and destinations are resolved in place.
    CHECK(has_fact(program,
                   "path_rel(t2, start(e1), source(the_bedroom), theme(the_milk))"));
    CHECK(has_fact(program,
                   "path_rel(t4, end(e4), destination(the_hallway), theme(the_milk))"));
    CHECK(has_fact(program,
                   "path_rel(t5, end(e5), destination(the_bathroom), theme(mary))"));
    for (const std::string& fact : rendered_facts(program)) {
        CHECK(fact.find("there_ref") == std::string::npos);
    }
}

TEST_CASE("translate_passage leaves anaphora unresolved") {
    StoryProgram raw = translate_passage(kGoldenStory, lexicons());
    CHECK(has_fact(raw,
                   "path_rel(t2, start(e1), source(there_ref), theme(the_milk))"));
    CHECK(has_fact(raw,
                   "path_rel(t4, end(e4), destination(there_ref), theme(the_milk))"));

    StoryProgram resolved = resolve_anaphora(raw);
    CHECK(resolved.facts.size() == raw.facts.size());
    CHECK(has_fact(resolved,
                   "path_rel(t2, start(e1), source(the_bedroom), theme(the_milk))"));
}

TEST_CASE("anaphora with no prior arrival resolves to unknown") {
    StoryProgram program = story_program({"Mary got the milk there."});
    CHECK(has_fact(program,
                   "path_rel(t1, start(e0), source(unknown), theme(the_milk))"));
}

TEST_CASE("questions consume no timestamp") {
    StoryProgram program = story_program({
        "Mary moved to the bedroom.",
        "Where is Mary?",
        "Mary journeyed to the hallway.",
    });
    REQUIRE(program.timeline.size() == 2);
    CHECK(has_fact(program,
                   "path_rel(t2, end(e1), destination(the_hallway), theme(mary))"));
}

TEST_CASE("copular sentences translate to relation facts") {
    StoryProgram program = story_program({
        "The office is north of the bedroom.",
        "The garden is west of the office.",
    });
    REQUIRE(program.timeline.size() == 2);
    CHECK(has_fact(program, "rel(north_of, t1, the_office, the_bedroom)"));
    CHECK(has_fact(program, "rel(west_of, t2, the_garden, the_office)"));
    CHECK(program.entities.at("the_office") == EntityKind::Location);
    CHECK(program.entities.at("the_garden") == EntityKind::Location);
}

TEST_CASE("an empty passage is an error") {
    try {
        translate_passage({}, lexicons());
        FAIL("expected EmptyStory");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyStory);
    }
    try {
        translate_passage({"Where is Mary?"}, lexicons());
        FAIL("expected EmptyStory");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyStory);
    }
}

TEST_CASE("parse failures name the offending sentence") {
    try {
        translate_passage({"Mary moved to the bedroom.", "To the bedroom."},
                          lexicons());
        FAIL("expected UnsupportedSyntax");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedSyntax);
        CHECK(e.message().rfind("sentence 2: ", 0) == 0);
    }
}

TEST_CASE("normalize_np joins and lowercases tokens") {
    std::vector<Token> tokens = tokenize("the milk", lexicons().words);
    CHECK(normalize_np(tokens) == "the_milk");
    try {
        normalize_np({});
        FAIL("expected EmptyPhrase");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyPhrase);
    }
}

TEST_CASE("the gazetteer parser skips comments and blanks") {
    std::set<std::string> names =
        parse_gazetteer("# people\nMary\n\n  John  \n#x\nsandra\n");
    CHECK(names == std::set<std::string>{"mary", "john", "sandra"});
    CHECK(lexicons().gazetteer.count("mary") == 1);
}
