// Command line front end: parse sentences, translate stories, answer
// questions with optional proof trees, evaluate task corpora, and generate
// synthetic task files.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "square/babi.hpp"
#include "square/data.hpp"
#include "square/errors.hpp"
#include "square/grammar.hpp"
#include "square/parse_tree.hpp"
#include "square/question.hpp"
#include "square/rulebase.hpp"
#include "square/solver.hpp"
#include "square/story.hpp"
#include "square/storygen.hpp"
#include "square/token.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw square::Error(square::ErrorKind::FormatError,
                            "cannot open file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// A story file is either raw sentences (one per line) or task-numbered
// lines; numbered input contributes the first story's declaratives.
std::vector<std::string> read_story_lines(const std::string& path) {
    std::string text = slurp(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos &&
        std::isdigit(static_cast<unsigned char>(text[first]))) {
        std::vector<square::BabiStory> stories =
            square::read_babi_text(text, path);
        std::vector<std::string> sentences;
        for (const auto& [id, line] : stories.front().declaratives) {
            sentences.push_back(line);
        }
        return sentences;
    }
    std::vector<std::string> sentences;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        size_t begin = line.find_first_not_of(" \t\r\n");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r\n");
        sentences.push_back(line.substr(begin, end - begin + 1));
    }
    return sentences;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic question answering over short stories"};
    app.require_subcommand(1);

    // --- parse ---------------------------------------------------------------
    std::string parse_sentence_text;
    CLI::App* cmd_parse =
        app.add_subcommand("parse", "print the constituency tree of a sentence");
    cmd_parse->add_option("sentence", parse_sentence_text, "the sentence")
        ->required();

    // --- translate -----------------------------------------------------------
    std::string translate_story;
    bool emit_program = false;
    std::vector<std::string> translate_tags;
    CLI::App* cmd_translate = app.add_subcommand(
        "translate", "translate a story file into timestamped facts");
    cmd_translate->add_option("story", translate_story, "story file")->required();
    cmd_translate->add_flag("--emit-program", emit_program,
                            "also print the assembled rule base");
    cmd_translate
        ->add_option("--tags", translate_tags,
                     "extra rule modules (directions, positional)")
        ->delimiter(',');

    // --- ask -----------------------------------------------------------------
    std::string ask_story;
    std::string ask_question;
    bool justify = false;
    std::size_t depth = 2;
    std::vector<std::string> ask_tags;
    CLI::App* cmd_ask =
        app.add_subcommand("ask", "answer one question about a story file");
    cmd_ask->add_option("story", ask_story, "story file")->required();
    cmd_ask->add_option("question", ask_question, "the question")->required();
    cmd_ask->add_flag("--justify", justify, "print the proof tree");
    cmd_ask->add_option("--depth", depth,
                        "justification depth, 0 = unlimited (default 2)");
    cmd_ask
        ->add_option("--tags", ask_tags,
                     "extra rule modules (directions, positional)")
        ->delimiter(',');

    // --- eval ----------------------------------------------------------------
    std::string eval_task;
    std::string eval_data;
    bool oracle_check = false;
    std::size_t parallel = 0;
    std::size_t limit = 0;
    double require = -1.0;
    CLI::App* cmd_eval =
        app.add_subcommand("eval", "run a task corpus and report accuracy");
    cmd_eval->add_option("--task", eval_task, "task name (qa1..qa17)")
        ->required();
    cmd_eval->add_option("--data", eval_data,
                         "task file path (default: the bundled corpus)");
    cmd_eval->add_flag("--oracle-check", oracle_check,
                       "cross-check every answer against the reference simulator");
    cmd_eval->add_option("--parallel", parallel,
                         "evaluate stories on this many threads");
    cmd_eval->add_option("--limit", limit, "evaluate only the first N stories");
    cmd_eval->add_option("--require", require,
                         "exit with status 2 if accuracy falls below this");

    // --- gen -----------------------------------------------------------------
    std::string gen_task;
    std::string gen_out;
    std::size_t gen_stories = 50;
    unsigned gen_seed = 0;
    bool seed_given = false;
    CLI::App* cmd_gen =
        app.add_subcommand("gen", "generate a synthetic task file");
    cmd_gen->add_option("--task", gen_task, "task name")->required();
    cmd_gen->add_option("--out", gen_out, "output path (default: stdout)");
    cmd_gen->add_option("--stories", gen_stories, "number of stories");
    cmd_gen->add_option("--seed", gen_seed, "generator seed")
        ->each([&](const std::string&) { seed_given = true; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            square::Lexicons lexicons = square::load_bundled_lexicons();
            std::vector<square::Token> tokens =
                square::tokenize(parse_sentence_text, lexicons.words);
            square::ParseTree tree = square::parse_sentence(tokens);
            std::cout << square::write_bracketed(tree) << "\n";
            return 0;
        }

        if (*cmd_translate) {
            square::Lexicons lexicons = square::load_bundled_lexicons();
            square::StoryProgram program = square::resolve_anaphora(
                square::translate_passage(read_story_lines(translate_story),
                                          lexicons));
            for (const std::string& warning : program.warnings) {
                std::cerr << "warning: " << warning << "\n";
            }
            for (const square::Term& fact : program.facts) {
                std::cout << square::render_term(fact) << ".\n";
            }
            if (emit_program) {
                square::RuleSet rules = square::assemble_rulebase(translate_tags);
                std::cout << "\n% rule base\n";
                for (const square::Rule& rule : rules.rules) {
                    std::cout << square::render_rule(rule) << "\n";
                }
            }
            return 0;
        }

        if (*cmd_ask) {
            square::QAResult result = square::answer_question(
                read_story_lines(ask_story), ask_question, ask_tags);
            std::cout << result.text << "\n";
            if (justify) {
                std::cout << square::render_justification(result.justification,
                                                          depth);
            }
            return 0;
        }

        if (*cmd_eval) {
            square::EvalOptions options;
            options.limit = limit;
            options.parallel = parallel;
            options.oracle_check = oracle_check;
            square::EvalReport report;
            if (eval_data.empty()) {
                report = square::evaluate(square::bundled_stories(eval_task),
                                          eval_task,
                                          square::tags_for_task(eval_task),
                                          options);
            } else {
                report = square::evaluate_file(eval_data, eval_task, options);
            }
            std::cout << square::render_report(report);
            if (require >= 0.0 && report.accuracy < require) return 2;
            return 0;
        }

        if (*cmd_gen) {
            unsigned seed =
                seed_given ? gen_seed : square::gen::default_seed(gen_task);
            std::string text =
                square::gen::generate_task(gen_task, seed, gen_stories);
            if (gen_out.empty() || gen_out == "-") {
                std::cout << text;
            } else {
                std::ofstream out(gen_out, std::ios::binary);
                if (!out) {
                    throw square::Error(square::ErrorKind::FormatError,
                                        "cannot write " + gen_out);
                }
                out << text;
            }
            return 0;
        }
    } catch (const square::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
