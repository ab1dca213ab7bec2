#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "square/babi.hpp"
#include "square/errors.hpp"
#include "square/storygen.hpp"

using namespace square;

namespace {

ErrorKind parse_kind(const std::string& text, long* where = nullptr) {
    try {
        read_babi_text(text);
    } catch (const Error& e) {
        if (where != nullptr) *where = e.where();
        return e.kind();
    }
    FAIL("expected a FormatError");
    return ErrorKind::NoAnswer;
}

} // namespace

TEST_CASE("task files split into stories with interleaved questions") {
    std::string text =
        "1 Mary moved to the bathroom.\n"
        "2 John went to the hallway.\n"
        "3 Where is Mary?\tbathroom\t1\n"
        "1 Daniel took the apple.\n"
        "2 Daniel went to the office.\n"
        "3 Where is the apple?\toffice\t1 2\n"
        "4 Daniel dropped the apple.\n"
        "5 Where is the apple?\toffice\t4\n";
    std::vector<BabiStory> stories = read_babi_text(text);
    REQUIRE(stories.size() == 2);

    const BabiStory& first = stories[0];
    REQUIRE(first.declaratives.size() == 2);
    CHECK(first.declaratives[0] ==
          std::make_pair(1, std::string("Mary moved to the bathroom.")));
    REQUIRE(first.questions.size() == 1);
    CHECK(first.questions[0].line_id == 3);
    CHECK(first.questions[0].question == "Where is Mary?");
    CHECK(first.questions[0].gold_answer == "bathroom");
    CHECK(first.questions[0].supporting_ids == std::vector<int>{1});
    CHECK(first.prefix_before(3) ==
          std::vector<std::string>{"Mary moved to the bathroom.",
                                   "John went to the hallway."});

    const BabiStory& second = stories[1];
    REQUIRE(second.questions.size() == 2);
    CHECK(second.questions[0].supporting_ids == std::vector<int>{1, 2});
    CHECK(second.prefix_before(3) ==
          std::vector<std::string>{"Daniel took the apple.",
                                   "Daniel went to the office."});
    // The second question's prefix includes the drop after the first question.
    CHECK(second.prefix_before(5).size() == 3);
}

TEST_CASE("malformed task files are rejected with line numbers") {
    long where = -1;
    CHECK(parse_kind("2 Mary moved to the bathroom.\n", &where) ==
          ErrorKind::FormatError);
    CHECK(where == 1);

    CHECK(parse_kind("1 Mary moved.\n3 John left.\n2 Sandra came.\n", &where) ==
          ErrorKind::FormatError);
    CHECK(where == 3);

    CHECK(parse_kind("1 Where is Mary?\tbathroom\n", &where) ==
          ErrorKind::FormatError);  // missing supporting-id field
    CHECK(where == 1);

    CHECK(parse_kind("hello\n", &where) == ErrorKind::FormatError);
    CHECK(parse_kind("1\n", &where) == ErrorKind::FormatError);
    CHECK(parse_kind("", &where) == ErrorKind::FormatError);
    CHECK(parse_kind("1 Where?\tyes\tzz\n", &where) == ErrorKind::FormatError);
}

TEST_CASE("tasks map to their extra rule sets") {
    CHECK(tags_for_task("qa1").empty());
    CHECK(tags_for_task("qa2").empty());
    CHECK(tags_for_task("qa3").empty());
    CHECK(tags_for_task("qa4") == std::vector<std::string>{"directions"});
    CHECK(tags_for_task("qa17") == std::vector<std::string>{"positional"});
}

TEST_CASE("answer_question runs the full pipeline") {
    std::vector<std::string> story = {
        "Mary moved to the bedroom.", "Mary got the milk there.",
        "Mary travelled to the hallway.", "Mary discarded the milk there.",
        "Mary journeyed to the bathroom.",
    };
    QAResult result = answer_question(story, "Where is the milk?", {});
    CHECK(result.text == "hallway");
    CHECK(render_term(result.justification.goal) ==
          "get_object_location(the_milk, the_hallway)");

    QAResult person = answer_question(story, "Where is Mary?", {});
    CHECK(person.text == "bathroom");
}

TEST_CASE("the oracle simulates movement, carrying, and dropping") {
    std::vector<std::string> story = {"Mary moved to the bathroom."};
    CHECK(oracle_simulate(story, "Where is Mary?") == "bathroom");
    CHECK(oracle_simulate(story, "Where is John?") == "");

    std::vector<std::string> carry = {
        "Mary moved to the bedroom.",
        "Mary got the milk there.",
        "Mary travelled to the hallway.",
    };
    CHECK(oracle_simulate(carry, "Where is the milk?") == "hallway");

    carry.push_back("Mary discarded the milk there.");
    carry.push_back("Mary journeyed to the bathroom.");
    CHECK(oracle_simulate(carry, "Where is the milk?") == "hallway");
    CHECK(oracle_simulate(carry, "Where is Mary?") == "bathroom");

    // An object never placed anywhere known answers empty.
    CHECK(oracle_simulate({"Mary got the milk."}, "Where is the milk?") == "");
}

TEST_CASE("the oracle answers before-questions from its history") {
    std::vector<std::string> story = {
        "Mary got the football.",
        "Mary moved to the bedroom.",
        "Mary travelled to the hallway.",
        "Mary dropped the football.",
    };
    CHECK(oracle_simulate(story, "Where was the football before the hallway?") ==
          "bedroom");
    CHECK(oracle_simulate(story, "Where is the football?") == "hallway");
}

TEST_CASE("the oracle resolves direction questions from stated edges") {
    std::vector<std::string> story = {
        "The office is north of the bedroom.",
        "The bathroom is west of the office.",
    };
    CHECK(oracle_simulate(story, "What is north of the bedroom?") == "office");
    CHECK(oracle_simulate(story, "What is the bedroom south of?") == "office");
    CHECK(oracle_simulate(story, "What is west of the office?") == "bathroom");
    CHECK(oracle_simulate(story, "What is east of the kitchen?") == "");
}

TEST_CASE("the oracle decides positional entailment by coordinates") {
    std::vector<std::string> story = {
        "The triangle is above the pink rectangle.",
        "The pink rectangle is to the left of the blue square.",
    };
    CHECK(oracle_simulate(story, "Is the triangle above the blue square?") ==
          "yes");
    CHECK(oracle_simulate(story, "Is the blue square below the triangle?") ==
          "yes");
    CHECK(oracle_simulate(story, "Is the triangle below the pink rectangle?") ==
          "no");
    // Disconnected shapes are not entailed either way.
    CHECK(oracle_simulate(story, "Is the triangle above the red circle?") ==
          "no");
}

TEST_CASE("the oracle rejects questions outside its grammar") {
    try {
        oracle_simulate({}, "Why is the sky blue?");
        FAIL("expected UnsupportedQuestion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedQuestion);
    }
    try {
        oracle_simulate({}, "Is the triangle blue?");
        FAIL("expected UnsupportedQuestion");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedQuestion);
    }
}

TEST_CASE("evaluate scores answers against the gold column") {
    std::vector<BabiStory> stories = read_babi_text(
        "1 Mary moved to the bathroom.\n"
        "2 Where is Mary?\tbathroom\t1\n");
    EvalOptions options;
    options.oracle_check = true;
    EvalReport report = evaluate(stories, "qa1", {}, options);
    CHECK(report.task == "qa1");
    CHECK(report.n_questions == 1);
    CHECK(report.n_correct == 1);
    CHECK(report.accuracy == doctest::Approx(100.0));
    CHECK(report.failures.empty());
    CHECK(report.oracle_disagreements == 0);

    std::string text = render_report(report);
    CHECK(text.find("task        questions    correct   accuracy") !=
          std::string::npos);
    CHECK(text.find("RESULT task=qa1 questions=1 correct=1 accuracy=100.0") !=
          std::string::npos);
    CHECK(text.find("oracle_disagreements=0") != std::string::npos);
}

TEST_CASE("evaluate records mismatches as failures") {
    std::vector<BabiStory> stories = read_babi_text(
        "1 Mary moved to the bathroom.\n"
        "2 Where is Mary?\tkitchen\t1\n");
    EvalReport report = evaluate(stories, "qa1", {});
    CHECK(report.n_correct == 0);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].expected == "kitchen");
    CHECK(report.failures[0].got == "bathroom");
    std::string text = render_report(report);
    CHECK(text.find("FAIL story=1 question=\"Where is Mary?\" "
                    "expected=\"kitchen\" got=\"bathroom\"") !=
          std::string::npos);
}

TEST_CASE("the story limit keeps a prefix of the corpus") {
    std::vector<BabiStory> stories = read_babi_text(
        "1 Mary moved to the bathroom.\n"
        "2 Where is Mary?\tbathroom\t1\n"
        "1 John went to the office.\n"
        "2 Where is John?\toffice\t1\n");
    EvalOptions options;
    options.limit = 1;
    EvalReport report = evaluate(stories, "qa1", {}, options);
    CHECK(report.n_questions == 1);
}

TEST_CASE("each bundled task carries fifty stories") {
    for (const char* task : {"qa1", "qa2", "qa3", "qa4", "qa17"}) {
        CHECK(bundled_stories(task).size() == 50);
    }
}

TEST_CASE("task generation is deterministic in the seed") {
    std::string a = gen::generate_task("qa1", 7, 3);
    std::string b = gen::generate_task("qa1", 7, 3);
    CHECK(a == b);
    CHECK(a != gen::generate_task("qa1", 8, 3));
    // The output is itself a well-formed task file.
    CHECK(read_babi_text(a).size() == 3);
}

TEST_CASE("random stories respect the documented caps") {
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        gen::RandomStory story = gen::random_story(rng);
        CHECK(!story.sentences.empty());
        CHECK(story.sentences.size() <= 8);
        CHECK(story.persons.size() <= 3);
        CHECK(story.objects.size() <= 3);
        std::set<std::string> persons(story.persons.begin(),
                                      story.persons.end());
        CHECK(persons.size() == story.persons.size());
        for (const std::string& sentence : story.sentences) {
            REQUIRE(!sentence.empty());
            CHECK(sentence.back() == '.');
        }
    }
}
