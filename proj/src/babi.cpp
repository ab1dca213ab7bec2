#include "square/babi.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "square/data.hpp"
#include "square/errors.hpp"
#include "square/grammar.hpp"
#include "square/question.hpp"
#include "square/rulebase.hpp"
#include "square/token.hpp"

namespace square {

namespace {

std::string trim(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

} // namespace

std::vector<std::string> BabiStory::prefix_before(int line_id) const {
    std::vector<std::string> prefix;
    for (const auto& [id, text] : declaratives) {
        if (id < line_id) prefix.push_back(text);
    }
    return prefix;
}

std::vector<BabiStory> read_babi_text(const std::string& text,
                                      const std::string& origin) {
    std::vector<BabiStory> stories;
    BabiStory current;
    bool in_story = false;
    int previous_id = 0;
    long line_number = 0;

    std::istringstream stream(text);
    std::string line;
    auto flush = [&]() {
        if (in_story) stories.push_back(std::move(current));
        current = BabiStory{};
        in_story = false;
    };

    while (std::getline(stream, line)) {
        ++line_number;
        if (trim(line).empty()) continue;

        std::istringstream fields(line);
        int id = 0;
        if (!(fields >> id) || id <= 0) {
            throw Error(ErrorKind::FormatError,
                        origin + ": line does not start with a positive id",
                        line_number);
        }
        std::string rest;
        std::getline(fields, rest);
        rest = trim(rest);
        if (rest.empty()) {
            throw Error(ErrorKind::FormatError, origin + ": line has no text",
                        line_number);
        }

        if (id == 1) {
            flush();
            in_story = true;
        } else if (!in_story) {
            throw Error(ErrorKind::FormatError,
                        origin + ": first line id must be 1", line_number);
        } else if (id <= previous_id) {
            throw Error(ErrorKind::FormatError,
                        origin + ": line ids must increase within a story",
                        line_number);
        }
        previous_id = id;

        size_t first_tab = rest.find('\t');
        if (first_tab == std::string::npos) {
            current.declaratives.emplace_back(id, rest);
            continue;
        }
        size_t second_tab = rest.find('\t', first_tab + 1);
        if (second_tab == std::string::npos) {
            throw Error(ErrorKind::FormatError,
                        origin + ": question line needs answer and "
                                 "supporting-id fields",
                        line_number);
        }
        QAItem item;
        item.line_id = id;
        item.question = trim(rest.substr(0, first_tab));
        item.gold_answer = trim(rest.substr(first_tab + 1,
                                            second_tab - first_tab - 1));
        std::istringstream ids(rest.substr(second_tab + 1));
        std::string token;
        while (ids >> token) {
            try {
                item.supporting_ids.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw Error(ErrorKind::FormatError,
                            origin + ": malformed supporting id '" + token + "'",
                            line_number);
            }
        }
        current.questions.push_back(std::move(item));
    }
    flush();

    if (stories.empty()) {
        throw Error(ErrorKind::FormatError, origin + ": no stories in input");
    }
    return stories;
}

std::vector<BabiStory> read_babi(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorKind::FormatError, "cannot open task file " + path);
    }
    std::ostringstream content;
    content << file.rdbuf();
    return read_babi_text(content.str(), path);
}

std::vector<std::string> tags_for_task(const std::string& task) {
    if (task == "qa4") return {kDirectionsTag};
    if (task == "qa17") return {kPositionalTag};
    return {};
}

std::vector<BabiStory> bundled_stories(const std::string& task_name) {
    return read_babi_text(data::babi_task(task_name), task_name + " (bundled)");
}

// --- main answer path -------------------------------------------------------

namespace {

const Lexicons& cached_lexicons() {
    static const Lexicons lexicons = load_bundled_lexicons();
    return lexicons;
}

QAResult answer_with_rules(const std::vector<std::string>& story_prefix,
                           const std::string& question_text,
                           const RuleSet& rules, const Lexicons& lexicons) {
    StoryProgram story;
    if (!story_prefix.empty()) {
        story = resolve_anaphora(translate_passage(story_prefix, lexicons));
    }

    std::vector<Token> tokens = tokenize(question_text, lexicons.words);
    ParseTree tree = parse_sentence(tokens);
    Question question = classify_question(tree, story.entities);
    Term goal = generate_query(question);

    Program program{story.facts, rules.rules, story.timeline};
    std::vector<Answer> answers = solve(goal, program);

    QAResult result;
    result.text = extract_answer(question, answers);
    if (!answers.empty()) {
        result.justification = answers.front().justification;
    } else {
        result.justification.kind = JustificationNode::Kind::NafSuccess;
        result.justification.goal = goal;
    }
    return result;
}

} // namespace

QAResult answer_question(const std::vector<std::string>& story_prefix,
                         const std::string& question,
                         const std::vector<std::string>& task_tags,
                         const Lexicons& lexicons) {
    RuleSet rules = assemble_rulebase(task_tags);
    return answer_with_rules(story_prefix, question, rules, lexicons);
}

QAResult answer_question(const std::vector<std::string>& story_prefix,
                         const std::string& question,
                         const std::vector<std::string>& task_tags) {
    return answer_question(story_prefix, question, task_tags,
                           cached_lexicons());
}

// --- brute-force oracle -----------------------------------------------------

namespace {

std::vector<std::string> words_of(const std::string& sentence) {
    std::string clean;
    for (char c : sentence) {
        if (c == '.' || c == '?' || c == '!' || c == ',') continue;
        clean += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    std::istringstream stream(clean);
    std::vector<std::string> words;
    std::string word;
    while (stream >> word) words.push_back(word);
    return words;
}

std::string join_words(const std::vector<std::string>& words, size_t begin,
                       size_t end) {
    std::string joined;
    for (size_t i = begin; i < end && i < words.size(); ++i) {
        if (!joined.empty()) joined += '_';
        joined += words[i];
    }
    return joined;
}

const std::map<std::string, std::pair<int, int>>& direction_offsets() {
    static const std::map<std::string, std::pair<int, int>> offsets = {
        {"north_of", {0, 1}}, {"south_of", {0, -1}}, {"east_of", {1, 0}},
        {"west_of", {-1, 0}}, {"above", {0, 1}},     {"below", {0, -1}},
        {"left_of", {-1, 0}}, {"right_of", {1, 0}},
    };
    return offsets;
}

std::string inverse_of(const std::string& direction) {
    static const std::map<std::string, std::string> inverses = {
        {"north_of", "south_of"}, {"south_of", "north_of"},
        {"east_of", "west_of"},   {"west_of", "east_of"},
        {"above", "below"},       {"below", "above"},
        {"left_of", "right_of"},  {"right_of", "left_of"},
    };
    return inverses.at(direction);
}

struct OracleEdge {
    std::string direction;
    std::string a;
    std::string b;
};

struct OracleWorld {
    std::map<std::string, std::string> person_room;
    std::map<std::string, std::string> object_holder;
    std::map<std::string, std::string> object_room;
    std::vector<OracleEdge> edges;
    // Per declarative step: every known object's effective room.
    std::vector<std::map<std::string, std::string>> history;

    std::string effective_room(const std::string& object) const {
        auto holder = object_holder.find(object);
        if (holder != object_holder.end() && !holder->second.empty()) {
            auto room = person_room.find(holder->second);
            return room == person_room.end() ? "" : room->second;
        }
        auto room = object_room.find(object);
        return room == object_room.end() ? "" : room->second;
    }

    void snapshot() {
        std::map<std::string, std::string> rooms;
        for (const auto& [object, holder] : object_holder) {
            rooms[object] = effective_room(object);
        }
        history.push_back(std::move(rooms));
    }
};

const std::vector<std::string>& move_verbs() {
    static const std::vector<std::string> verbs = {
        "moved", "went", "journeyed", "travelled", "traveled", "ran", "walked"};
    return verbs;
}

const std::vector<std::string>& get_verbs() {
    static const std::vector<std::string> verbs = {"got", "grabbed", "took"};
    return verbs;
}

const std::vector<std::string>& drop_verbs() {
    static const std::vector<std::string> verbs = {
        "dropped", "discarded", "tossed", "threw", "left"};
    return verbs;
}

bool contains(const std::vector<std::string>& list, const std::string& word) {
    return std::find(list.begin(), list.end(), word) != list.end();
}

// Joins the words of a copular complement's direction, if any: "north of",
// "above", "to the left of" -> canonical name and count of consumed words.
std::pair<std::string, size_t> match_direction(const std::vector<std::string>& w,
                                               size_t at) {
    auto word = [&](size_t i) {
        return at + i < w.size() ? w[at + i] : std::string();
    };
    for (const char* axis : {"north", "south", "east", "west"}) {
        if (word(0) == axis && word(1) == "of") return {std::string(axis) + "_of", 2};
    }
    if (word(0) == "above") return {"above", 1};
    if (word(0) == "below") return {"below", 1};
    if (word(0) == "to" && word(1) == "the" && word(3) == "of" &&
        (word(2) == "left" || word(2) == "right")) {
        return {word(2) + "_of", 4};
    }
    if ((word(0) == "left" || word(0) == "right") && word(1) == "of") {
        return {word(0) + "_of", 2};
    }
    return {"", 0};
}

void oracle_observe(OracleWorld& world, const std::string& sentence) {
    std::vector<std::string> w = words_of(sentence);
    if (w.empty()) return;

    // Copular relation: "the A is DIR the B" (colors are ignored).
    for (size_t i = 1; i + 1 < w.size(); ++i) {
        if (w[i] != "is" && w[i] != "was") continue;
        auto [direction, used] = match_direction(w, i + 1);
        if (direction.empty()) break;
        std::string a = join_words(w, 0, i);
        std::string b = join_words(w, i + 1 + used, w.size());
        if (!a.empty() && !b.empty()) {
            world.edges.push_back({direction, a, b});
        }
        world.snapshot();
        return;
    }

    const std::string& actor = w[0];
    size_t verb_end = 0;
    enum class Act { None, Move, Get, Drop } act = Act::None;
    if (w.size() >= 2) {
        if (contains(move_verbs(), w[1])) {
            act = Act::Move;
            verb_end = 2;
        } else if (contains(get_verbs(), w[1])) {
            act = Act::Get;
            verb_end = 2;
        } else if (w[1] == "picked" && w.size() >= 3 && w[2] == "up") {
            act = Act::Get;
            verb_end = 3;
        } else if (contains(drop_verbs(), w[1])) {
            act = Act::Drop;
            verb_end = 2;
        } else if (w[1] == "put" && w.size() >= 3 && w[2] == "down") {
            act = Act::Drop;
            verb_end = 3;
        } else if (w[1] == "gave" || w[1] == "handed" || w[1] == "passed") {
            act = Act::Drop; // release: the object stays in the giver's room
            verb_end = 2;
        }
    }

    switch (act) {
        case Act::Move: {
            size_t to = verb_end;
            while (to < w.size() && w[to] != "to") ++to;
            if (to + 2 <= w.size() && to + 1 < w.size() && w[to + 1] == "the") {
                world.person_room[actor] = join_words(w, to + 2, w.size());
            }
            break;
        }
        case Act::Get: {
            size_t begin = verb_end;
            if (begin < w.size() && w[begin] == "the") ++begin;
            size_t end = w.size();
            if (end > begin && w[end - 1] == "there") --end;
            std::string object = join_words(w, begin, end);
            if (!object.empty()) {
                world.object_holder[object] = actor;
                world.object_room[object] = "";
            }
            break;
        }
        case Act::Drop: {
            size_t begin = verb_end;
            if (begin < w.size() && w[begin] == "the") ++begin;
            size_t end = begin;
            while (end < w.size() && w[end] != "there" && w[end] != "to") ++end;
            std::string object = join_words(w, begin, end);
            std::string target;
            if (end < w.size() && w[end] == "to" && end + 2 <= w.size() &&
                end + 1 < w.size() && w[end + 1] == "the") {
                target = join_words(w, end + 2, w.size());
            }
            if (!object.empty()) {
                std::string room = !target.empty()
                                       ? target
                                       : world.person_room.count(actor)
                                             ? world.person_room[actor]
                                             : std::string();
                world.object_holder[object] = "";
                world.object_room[object] = room;
            }
            break;
        }
        case Act::None:
            break;
    }
    world.snapshot();
}

// Places shapes on integer coordinates from the edge list; components are
// merged by translation when an edge bridges them.
std::map<std::string, std::pair<long, long>> place_shapes(
    const std::vector<OracleEdge>& edges) {
    std::map<std::string, std::pair<long, long>> coords;
    std::map<std::string, int> component;
    int next_component = 0;

    for (const OracleEdge& edge : edges) {
        auto offset = direction_offsets().at(edge.direction);
        bool have_a = coords.count(edge.a) != 0;
        bool have_b = coords.count(edge.b) != 0;
        if (!have_a && !have_b) {
            int comp = next_component++;
            coords[edge.b] = {0, 0};
            coords[edge.a] = {offset.first, offset.second};
            component[edge.a] = component[edge.b] = comp;
        } else if (have_a && !have_b) {
            coords[edge.b] = {coords[edge.a].first - offset.first,
                              coords[edge.a].second - offset.second};
            component[edge.b] = component[edge.a];
        } else if (!have_a && have_b) {
            coords[edge.a] = {coords[edge.b].first + offset.first,
                              coords[edge.b].second + offset.second};
            component[edge.a] = component[edge.b];
        } else if (component[edge.a] != component[edge.b]) {
            // Translate b's component so the new edge constraint holds.
            long dx = coords[edge.a].first - offset.first - coords[edge.b].first;
            long dy = coords[edge.a].second - offset.second - coords[edge.b].second;
            int from = component[edge.b];
            int to = component[edge.a];
            for (auto& [shape, comp] : component) {
                if (comp != from) continue;
                comp = to;
                coords[shape].first += dx;
                coords[shape].second += dy;
            }
        }
    }

    // Shapes in distinct components stay incomparable; encode the component
    // in the x/y origin being shared only within a component.
    (void)component;
    return coords;
}

bool same_component(const std::vector<OracleEdge>& edges, const std::string& a,
                    const std::string& b) {
    std::map<std::string, std::string> parent;
    auto find = [&](std::string x) {
        while (parent.count(x) && parent[x] != x) x = parent[x];
        return x;
    };
    for (const OracleEdge& edge : edges) {
        parent.emplace(edge.a, edge.a);
        parent.emplace(edge.b, edge.b);
        parent[find(edge.a)] = find(edge.b);
    }
    if (!parent.count(a) || !parent.count(b)) return false;
    return find(a) == find(b);
}

std::string strip_the(const std::string& atom) {
    return atom.rfind("the_", 0) == 0 ? atom.substr(4) : atom;
}

std::string oracle_answer(const OracleWorld& world,
                          const std::string& question) {
    std::vector<std::string> w = words_of(question);
    if (w.empty()) {
        throw Error(ErrorKind::UnsupportedQuestion, "empty question");
    }

    if (w[0] == "where" && w.size() >= 3 && (w[1] == "is" || w[1] == "was")) {
        // "where was the X before the R"
        size_t before = 2;
        while (before < w.size() && w[before] != "before") ++before;
        if (before < w.size()) {
            size_t ref_begin = before + 1;
            if (ref_begin < w.size() && w[ref_begin] == "the") ++ref_begin;
            std::string object = join_words(w, w[2] == "the" ? 3 : 2, before);
            std::string reference = join_words(w, ref_begin, w.size());
            for (size_t step = 0; step < world.history.size(); ++step) {
                auto it = world.history[step].find(object);
                if (it == world.history[step].end() || it->second != reference) {
                    continue;
                }
                if (step == 0) return "";
                auto prev = world.history[step - 1].find(object);
                return prev == world.history[step - 1].end() ? "" : prev->second;
            }
            return "";
        }
        if (w[2] == "the") {
            std::string object = join_words(w, 3, w.size());
            return world.effective_room(object);
        }
        std::string person = join_words(w, 2, w.size());
        auto room = world.person_room.find(person);
        return room == world.person_room.end() ? "" : room->second;
    }

    if (w[0] == "what" && w.size() >= 3 && (w[1] == "is" || w[1] == "was")) {
        auto [direction, used] = match_direction(w, 2);
        if (!direction.empty()) {
            // "what is DIR the B" -> the A with A DIR B
            std::string b = join_words(w, 2 + used, w.size());
            for (const OracleEdge& edge : world.edges) {
                if (edge.direction == direction && edge.b == b) {
                    return strip_the(edge.a);
                }
                if (edge.direction == inverse_of(direction) && edge.a == b) {
                    return strip_the(edge.b);
                }
            }
            return "";
        }
        // "what is the A DIR of" -> the B with A DIR B
        size_t end = 2;
        std::string found;
        for (; end < w.size(); ++end) {
            auto [dir2, used2] = match_direction(w, end);
            if (!dir2.empty() && end + used2 == w.size()) {
                found = dir2;
                break;
            }
        }
        if (found.empty()) {
            throw Error(ErrorKind::UnsupportedQuestion,
                        "cannot find the direction in a 'what' question");
        }
        std::string a = join_words(w, 2, end);
        for (const OracleEdge& edge : world.edges) {
            if (edge.direction == found && edge.a == a) return strip_the(edge.b);
            if (edge.direction == inverse_of(found) && edge.b == a) {
                return strip_the(edge.a);
            }
        }
        return "";
    }

    if ((w[0] == "is" || w[0] == "was") && w.size() >= 4) {
        size_t at = 1;
        std::string a, b, direction;
        for (size_t split = 2; split < w.size(); ++split) {
            auto [dir, used] = match_direction(w, split);
            if (dir.empty()) continue;
            a = join_words(w, at, split);
            b = join_words(w, split + used, w.size());
            direction = dir;
            break;
        }
        if (direction.empty() || a.empty() || b.empty()) {
            throw Error(ErrorKind::UnsupportedQuestion,
                        "yes/no question without a spatial relation");
        }
        if (!same_component(world.edges, a, b)) return "no";
        auto coords = place_shapes(world.edges);
        auto offset = direction_offsets().at(direction);
        long da = 0;
        if (offset.first != 0) {
            da = (coords[a].first - coords[b].first) * offset.first;
        } else {
            da = (coords[a].second - coords[b].second) * offset.second;
        }
        return da > 0 ? "yes" : "no";
    }

    throw Error(ErrorKind::UnsupportedQuestion,
                "question outside the oracle's grammar: " + question);
}

} // namespace

std::string oracle_simulate(const std::vector<std::string>& story_prefix,
                            const std::string& question) {
    OracleWorld world;
    for (const std::string& sentence : story_prefix) {
        oracle_observe(world, sentence);
    }
    return oracle_answer(world, question);
}

// --- evaluation -------------------------------------------------------------

namespace {

struct StoryOutcome {
    size_t n_questions = 0;
    size_t n_correct = 0;
    double seconds = 0.0;
    std::vector<EvalFailure> failures;
    std::vector<EvalFailure> disagreements;
};

StoryOutcome evaluate_story(const BabiStory& story, size_t story_index,
                            const RuleSet& rules, const Lexicons& lexicons,
                            bool oracle_check) {
    StoryOutcome outcome;
    for (const QAItem& item : story.questions) {
        std::vector<std::string> prefix = story.prefix_before(item.line_id);
        std::string got;
        auto start = std::chrono::steady_clock::now();
        try {
            got = answer_with_rules(prefix, item.question, rules, lexicons).text;
        } catch (const Error& e) {
            got = std::string("error: ") + error_kind_name(e.kind());
        }
        auto stop = std::chrono::steady_clock::now();
        outcome.seconds +=
            std::chrono::duration<double>(stop - start).count();

        ++outcome.n_questions;
        if (trim(got) == trim(item.gold_answer)) {
            ++outcome.n_correct;
        } else {
            outcome.failures.push_back(
                {story_index, item.question, trim(item.gold_answer), trim(got)});
        }

        if (oracle_check) {
            std::string oracle;
            try {
                oracle = oracle_simulate(prefix, item.question);
            } catch (const Error& e) {
                oracle = std::string("error: ") + error_kind_name(e.kind());
            }
            if (trim(oracle) != trim(got)) {
                outcome.disagreements.push_back(
                    {story_index, item.question, trim(oracle), trim(got)});
            }
        }
    }
    return outcome;
}

} // namespace

EvalReport evaluate(const std::vector<BabiStory>& stories,
                    const std::string& task_name,
                    const std::vector<std::string>& task_tags,
                    const EvalOptions& options) {
    const Lexicons& lexicons = cached_lexicons();
    RuleSet rules = assemble_rulebase(task_tags);

    size_t count = stories.size();
    if (options.limit > 0 && options.limit < count) count = options.limit;

    std::vector<StoryOutcome> outcomes(count);
#ifdef _OPENMP
    if (options.parallel > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(options.parallel)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            outcomes[i] = evaluate_story(stories[i], static_cast<size_t>(i),
                                         rules, lexicons, options.oracle_check);
        }
    } else
#endif
    {
        for (size_t i = 0; i < count; ++i) {
            outcomes[i] = evaluate_story(stories[i], i, rules, lexicons,
                                         options.oracle_check);
        }
    }

    EvalReport report;
    report.task = task_name;
    double seconds = 0.0;
    for (const StoryOutcome& outcome : outcomes) {
        report.n_questions += outcome.n_questions;
        report.n_correct += outcome.n_correct;
        seconds += outcome.seconds;
        report.failures.insert(report.failures.end(), outcome.failures.begin(),
                               outcome.failures.end());
        report.disagreements.insert(report.disagreements.end(),
                                    outcome.disagreements.begin(),
                                    outcome.disagreements.end());
    }
    report.oracle_disagreements = report.disagreements.size();
    if (report.n_questions > 0) {
        report.accuracy = 100.0 * static_cast<double>(report.n_correct) /
                          static_cast<double>(report.n_questions);
        report.avg_time_per_question =
            seconds / static_cast<double>(report.n_questions);
    }
    return report;
}

EvalReport evaluate_file(const std::string& path, const std::string& task_name,
                         const EvalOptions& options) {
    return evaluate(read_babi(path), task_name, tags_for_task(task_name),
                    options);
}

std::string render_report(const EvalReport& report) {
    std::ostringstream out;
    char accuracy[32];
    std::snprintf(accuracy, sizeof accuracy, "%.1f", report.accuracy);
    char avg_ms[32];
    std::snprintf(avg_ms, sizeof avg_ms, "%.3f",
                  report.avg_time_per_question * 1000.0);

    out << "task        questions    correct   accuracy   avg time/question\n";
    char row[160];
    std::snprintf(row, sizeof row, "%-10s %10zu %10zu %9s%% %15s ms\n",
                  report.task.c_str(), report.n_questions, report.n_correct,
                  accuracy, avg_ms);
    out << row;

    for (const EvalFailure& failure : report.failures) {
        out << "FAIL story=" << failure.story_index + 1 << " question=\""
            << failure.question << "\" expected=\"" << failure.expected
            << "\" got=\"" << failure.got << "\"\n";
    }
    for (const EvalFailure& disagreement : report.disagreements) {
        out << "DISAGREE story=" << disagreement.story_index + 1
            << " question=\"" << disagreement.question << "\" oracle=\""
            << disagreement.expected << "\" engine=\"" << disagreement.got
            << "\"\n";
    }

    out << "RESULT task=" << report.task << " questions=" << report.n_questions
        << " correct=" << report.n_correct << " accuracy=" << accuracy
        << " avg_time_ms=" << avg_ms
        << " oracle_disagreements=" << report.oracle_disagreements << "\n";
    return out.str();
}

} // namespace square
