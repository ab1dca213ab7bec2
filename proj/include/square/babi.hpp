#ifndef SQUARE_BABI_HPP
#define SQUARE_BABI_HPP

#include <string>
#include <utility>
#include <vector>

#include "square/solver.hpp"
#include "square/story.hpp"

namespace square {

/// One question line of a bAbI task file.
struct QAItem {
    int line_id = 0;
    std::string question;
    std::string gold_answer;
    std::vector<int> supporting_ids;  // line ids of supporting declaratives
};

/// One story: declaratives with their line ids, and the questions interleaved
/// among them.  Line ids increase strictly within a story and restart at 1;
/// a question's prefix is every declarative with a smaller line id.
struct BabiStory {
    std::vector<std::pair<int, std::string>> declaratives;
    std::vector<QAItem> questions;

    /// The declarative texts preceding the given line id.
    std::vector<std::string> prefix_before(int line_id) const;
};

/// Parses bAbI v1.2 text: each line is `ID text`, question lines carry two
/// tab-separated extra fields `ID question \t answer \t supporting-ids`, and
/// an ID of 1 starts a new story.  Throws FormatError (with the line number)
/// for malformed lines, a first line whose id is not 1, or empty input.
std::vector<BabiStory> read_babi(const std::string& path);
std::vector<BabiStory> read_babi_text(const std::string& text,
                                      const std::string& origin = "<text>");

/// The rule-set tags a task needs beyond core: qa4 -> directions,
/// qa17 -> positional, everything else -> none.
std::vector<std::string> tags_for_task(const std::string& task);

/// An answered question: the answer text plus its justification.  Questions
/// whose goal fails with a "no" answer carry a negation node for the goal.
struct QAResult {
    std::string text;
    JustificationNode justification;
};

/// Runs the full pipeline on a story prefix and one question: translate the
/// passage, resolve anaphora, assemble the rulebase for the task tags,
/// classify the question, solve, and extract the answer.  Pipeline errors
/// (unsupported syntax, no answer, ...) propagate to the caller.
QAResult answer_question(const std::vector<std::string>& story_prefix,
                         const std::string& question,
                         const std::vector<std::string>& task_tags,
                         const Lexicons& lexicons);

/// answer_question against the bundled lexicons.
QAResult answer_question(const std::vector<std::string>& story_prefix,
                         const std::string& question,
                         const std::vector<std::string>& task_tags);

/// Brute-force reference: simulates the story with an explicit world state
/// (person rooms, object holders and resting places, relation edges with
/// coordinates) by pattern-matching the raw sentence text, then answers the
/// question by direct lookup.  Shares no code with the lexicon, matcher, or
/// reasoner.  Returns the answer text, or throws the same classification
/// errors as the main path for questions outside the five-task grammar.
std::string oracle_simulate(const std::vector<std::string>& story_prefix,
                            const std::string& question);

struct EvalFailure {
    size_t story_index = 0;
    std::string question;
    std::string expected;
    std::string got;
};

struct EvalReport {
    std::string task;
    size_t n_questions = 0;
    size_t n_correct = 0;
    double accuracy = 0.0;              // percent
    double avg_time_per_question = 0.0; // seconds, answer path only
    std::vector<EvalFailure> failures;
    // Filled only when oracle checking is on; expected = oracle answer.
    size_t oracle_disagreements = 0;
    std::vector<EvalFailure> disagreements;
};

struct EvalOptions {
    size_t limit = 0;         // keep only the first N stories (0 = all)
    int parallel = 0;         // >1 enables story-level parallel evaluation
    bool oracle_check = false;
};

/// Answers every question of every story against its prefix and scores the
/// answers by exact string equality with the gold answer after whitespace
/// trim.  A question whose pipeline errors counts as incorrect.  Timing
/// covers the answer path only; lexicons and rules load once outside the
/// clock.
EvalReport evaluate(const std::vector<BabiStory>& stories,
                    const std::string& task_name,
                    const std::vector<std::string>& task_tags,
                    const EvalOptions& options = {});

/// Reads the task file and evaluates it with tags_for_task(task_name).
EvalReport evaluate_file(const std::string& path, const std::string& task_name,
                         const EvalOptions& options = {});

/// The bundled 50-story subset for a task ("qa1", "qa2", "qa3", "qa4",
/// "qa17"), parsed.
std::vector<BabiStory> bundled_stories(const std::string& task_name);

/// Renders the report as an aligned table followed by one machine-readable
/// RESULT line.
std::string render_report(const EvalReport& report);

} // namespace square

#endif // SQUARE_BABI_HPP
