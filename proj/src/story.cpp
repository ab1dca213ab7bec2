#include "square/story.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <utility>

#include "square/data.hpp"
#include "square/errors.hpp"
#include "square/grammar.hpp"
#include "square/parse_tree.hpp"
#include "square/rulebase.hpp"

namespace square {

namespace {

std::string lowercase(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

std::string trimmed(const std::string& line) {
    size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

bool is_question_tree(const ParseTree& tree) {
    return !tree.children.empty() && tree.children.front().label == "SBARQ";
}

bool is_copular(const std::vector<Token>& tokens) {
    for (const Token& token : tokens) {
        if (token.lemma == "be" && (token.pos == "VBZ" || token.pos == "VBD")) {
            return true;
        }
    }
    return false;
}

// Role argument positions that name entities, per fact predicate.
bool is_role_functor(const std::string& functor) {
    return functor == "agent" || functor == "theme" || functor == "source" ||
           functor == "destination" || functor == "initial_location" ||
           functor == "location";
}

bool is_entity_atom(const std::string& atom) {
    return !atom.empty() && atom != "unknown" && atom != "there_ref";
}

void note_entity(std::map<std::string, EntityKind>& entities,
                 const std::string& atom, EntityKind kind) {
    if (!is_entity_atom(atom)) return;
    auto it = entities.find(atom);
    if (it == entities.end()) {
        entities.emplace(atom, kind);
        return;
    }
    // person > object > location
    if (static_cast<int>(kind) < static_cast<int>(it->second)) it->second = kind;
}

// The person a timestamp's events belong to: the agent of a cause fact, or
// the self-propelled mover of a motion fact with no cause over its event.
std::string acting_person(const std::vector<Term>& facts, int timestamp) {
    for (const Term& fact : facts) {
        if (fact.text != "cause" || fact.args.size() != 3) continue;
        if (fact.args[0].time != timestamp) continue;
        return fact.args[1].args.empty() ? "" : fact.args[1].args[0].text;
    }
    for (const Term& fact : facts) {
        if (fact.text != "motion" || fact.args.size() != 3) continue;
        if (fact.args[0].time != timestamp) continue;
        return fact.args[2].args.empty() ? "" : fact.args[2].args[0].text;
    }
    return "";
}

// The person's most recent known arrival at or before `timestamp`.
std::string latest_arrival(const std::vector<Term>& facts,
                           const std::string& person, int timestamp) {
    int best_time = 0;
    std::string location;
    for (const Term& fact : facts) {
        if (fact.text != "path_rel" || fact.args.size() != 4) continue;
        if (fact.args[0].time > timestamp || fact.args[0].time < best_time) continue;
        if (fact.args[1].text != "end") continue;
        if (fact.args[2].text != "destination") continue;
        if (fact.args[3].args.empty() || fact.args[3].args[0].text != person) continue;
        const std::string& place = fact.args[2].args.empty()
                                       ? std::string()
                                       : fact.args[2].args[0].text;
        if (!is_entity_atom(place)) continue;
        best_time = fact.args[0].time;
        location = place;
    }
    return location;
}

Term substitute_there(const Term& term, const std::string& replacement) {
    if (term.kind == Term::Kind::Atom && term.text == "there_ref") {
        return Term::atom(replacement);
    }
    Term out = term;
    for (Term& arg : out.args) arg = substitute_there(arg, replacement);
    return out;
}

bool mentions_there(const Term& term) {
    if (term.kind == Term::Kind::Atom && term.text == "there_ref") return true;
    for (const Term& arg : term.args) {
        if (mentions_there(arg)) return true;
    }
    return false;
}

void classify_entities(StoryProgram& program, const std::set<std::string>& gazetteer) {
    // Pass 1: persons — gazetteer names, agents, and self-propelled movers.
    for (const Term& fact : program.facts) {
        if (fact.text == "cause" && fact.args.size() == 3 &&
            !fact.args[1].args.empty()) {
            note_entity(program.entities, fact.args[1].args[0].text,
                        EntityKind::Person);
        }
        if (fact.text == "motion" && fact.args.size() == 3 &&
            !fact.args[2].args.empty()) {
            const Term& time = fact.args[0];
            const Term& event = fact.args[1];
            bool caused = false;
            for (const Term& other : program.facts) {
                if (other.text == "cause" && other.args.size() == 3 &&
                    other.args[0] == time && other.args[2].args.size() == 1 &&
                    !event.args.empty() &&
                    other.args[2].args[0] == event.args[0]) {
                    caused = true;
                    break;
                }
            }
            if (!caused) {
                note_entity(program.entities, fact.args[2].args[0].text,
                            EntityKind::Person);
            }
        }
    }
    // Pass 2: themes that are not persons are objects.
    for (const Term& fact : program.facts) {
        if (fact.text != "path_rel" || fact.args.size() != 4) continue;
        if (fact.args[3].args.empty()) continue;
        const std::string& theme = fact.args[3].args[0].text;
        if (!is_entity_atom(theme)) continue;
        auto it = program.entities.find(theme);
        if (it == program.entities.end() || it->second != EntityKind::Person) {
            note_entity(program.entities, theme, EntityKind::Object);
        }
    }
    // Pass 3: places — locative role fillers and relation arguments.
    for (const Term& fact : program.facts) {
        if (fact.text == "rel" && fact.args.size() == 4) {
            note_entity(program.entities, fact.args[2].text, EntityKind::Location);
            note_entity(program.entities, fact.args[3].text, EntityKind::Location);
            continue;
        }
        if (fact.text == "attr" && fact.args.size() == 4) {
            note_entity(program.entities, fact.args[2].text, EntityKind::Location);
            continue;
        }
        for (const Term& arg : fact.args) {
            if (arg.args.size() != 1 || !is_role_functor(arg.text)) continue;
            if (arg.text == "source" || arg.text == "destination" ||
                arg.text == "initial_location" || arg.text == "location") {
                note_entity(program.entities, arg.args[0].text,
                            EntityKind::Location);
            }
        }
    }
    // Gazetteer names win over everything.
    for (auto& [atom, kind] : program.entities) {
        if (gazetteer.count(atom)) kind = EntityKind::Person;
    }
}

} // namespace

std::set<std::string> parse_gazetteer(const std::string& text) {
    std::set<std::string> names;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::string name = trimmed(line);
        if (name.empty() || name[0] == '#') continue;
        names.insert(lowercase(name));
    }
    return names;
}

Lexicons load_bundled_lexicons() {
    Lexicons lexicons;
    lexicons.words = WordLexicon::from_text(data::lexicon_tsv());
    lexicons.frames = FrameLexicon::from_text(data::frames_vn());
    lexicons.gazetteer = parse_gazetteer(data::gazetteer_txt());
    return lexicons;
}

std::string normalize_np(const std::vector<Token>& words) {
    if (words.empty()) {
        throw Error(ErrorKind::EmptyPhrase, "empty noun phrase");
    }
    std::string atom;
    for (const Token& token : words) {
        if (!atom.empty()) atom += '_';
        atom += lowercase(token.text);
    }
    return atom;
}

StoryProgram translate_passage(const std::vector<std::string>& sentences,
                               const Lexicons& lexicons) {
    StoryProgram program;
    int timestamp = 0;
    int event_counter = 0;

    for (size_t i = 0; i < sentences.size(); ++i) {
        std::vector<Token> tokens;
        ParseTree tree = ParseTree::node("ROOT", {});
        try {
            tokens = tokenize(sentences[i], lexicons.words);
            tree = parse_sentence(tokens);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::UnsupportedSyntax ||
                e.kind() == ErrorKind::EmptySentence) {
                throw Error(e.kind(),
                            "sentence " + std::to_string(i + 1) + ": " +
                                e.message(),
                            static_cast<long>(i + 1));
            }
            throw;
        }
        if (is_question_tree(tree)) continue; // questions consume no timestamp

        ++timestamp;
        try {
            if (is_copular(tokens)) {
                std::vector<Term> facts = translate_copular(tree, timestamp);
                program.facts.insert(program.facts.end(), facts.begin(),
                                     facts.end());
            } else {
                SentenceSemantics sem = get_sentence_semantics(
                    tree, lexicons.words, lexicons.frames, timestamp,
                    event_counter);
                program.facts.insert(program.facts.end(), sem.facts.begin(),
                                     sem.facts.end());
                program.matches.insert(program.matches.end(),
                                       sem.matches.begin(), sem.matches.end());
                program.warnings.insert(program.warnings.end(),
                                        sem.warnings.begin(),
                                        sem.warnings.end());
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::UnsupportedSyntax) {
                throw Error(e.kind(),
                            "sentence " + std::to_string(i + 1) + ": " +
                                e.message(),
                            static_cast<long>(i + 1));
            }
            throw;
        }
        program.timeline.push_back(Term::time_point(timestamp));
    }

    if (timestamp == 0) {
        throw Error(ErrorKind::EmptyStory, "no translatable sentence in passage");
    }

    classify_entities(program, lexicons.gazetteer);
    return program;
}

StoryProgram resolve_anaphora(const StoryProgram& program) {
    StoryProgram out = program;
    // Resolve per timestamp: "there" names wherever the acting person last
    // arrived, at or before the sentence's own timestamp.
    std::map<int, std::string> resolution;
    for (const Term& fact : out.facts) {
        if (!mentions_there(fact)) continue;
        int time = fact.args.empty() ? 0 : fact.args[0].time;
        if (resolution.count(time)) continue;
        std::string person = acting_person(out.facts, time);
        std::string place = person.empty()
                                ? std::string()
                                : latest_arrival(out.facts, person, time);
        resolution[time] = place.empty() ? "unknown" : place;
    }
    if (resolution.empty()) return out;
    for (Term& fact : out.facts) {
        if (!mentions_there(fact)) continue;
        int time = fact.args.empty() ? 0 : fact.args[0].time;
        fact = substitute_there(fact, resolution[time]);
    }
    classify_entities(out, {});
    return out;
}

} // namespace square
