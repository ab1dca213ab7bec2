#include "square/question.hpp"

#include <algorithm>
#include <cctype>

#include "square/errors.hpp"
#include "square/matcher.hpp"
#include "square/rulebase.hpp"

namespace square {

namespace {

const ParseTree* find_child(const ParseTree& node, const std::string& label) {
    for (const ParseTree& child : node.children) {
        if (child.label == label) return &child;
    }
    return nullptr;
}

std::string lowercase(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

[[noreturn]] void unsupported(const std::string& detail) {
    throw Error(ErrorKind::UnsupportedQuestion, detail);
}

// The wh-word, lowercased, or "" for yes/no questions.
std::string wh_word(const ParseTree& sbarq) {
    for (const char* label : {"WHADVP", "WHNP"}) {
        if (const ParseTree* wh = find_child(sbarq, label)) {
            if (!wh->children.empty() && wh->children.front().is_leaf()) {
                return lowercase(wh->children.front().word);
            }
        }
    }
    return "";
}

struct PPInfo {
    std::string head;    // preposition word, lowercased
    std::string object;  // normalized NP atom, "" when stranded
};

PPInfo pp_info(const ParseTree& pp) {
    PPInfo info;
    if (!pp.children.empty() && pp.children.front().is_leaf()) {
        info.head = lowercase(pp.children.front().word);
    }
    if (const ParseTree* np = find_child(pp, "NP")) {
        info.object = np_atom(*np);
    }
    return info;
}

bool looks_like_person(const ParseTree& np,
                       const std::map<std::string, EntityKind>& entities,
                       const std::string& atom) {
    auto it = entities.find(atom);
    if (it != entities.end()) return it->second == EntityKind::Person;
    // Unseen entity: a bare proper noun reads as a person.
    return np.children.size() == 1 && np.children.front().label == "NNP";
}

} // namespace

Question classify_question(const ParseTree& tree,
                           const std::map<std::string, EntityKind>& entities) {
    const ParseTree* sbarq = &tree;
    if (sbarq->label == "ROOT" && !sbarq->children.empty()) {
        sbarq = &sbarq->children.front();
    }
    if (sbarq->label != "SBARQ") unsupported("not a question clause");
    const ParseTree* sq = find_child(*sbarq, "SQ");
    if (sq == nullptr) unsupported("question without a clause body");

    const ParseTree* np = find_child(*sq, "NP");
    const ParseTree* pp = find_child(*sq, "PP");
    std::string wh = wh_word(*sbarq);

    if (wh == "where") {
        if (np == nullptr) unsupported("'where' question without a subject");
        std::string atom = np_atom(*np);
        if (pp != nullptr) {
            PPInfo info = pp_info(*pp);
            if (info.head != "before" || info.object.empty()) {
                unsupported("'where' question with an unrecognized modifier '" +
                            info.head + "'");
            }
            Question q{QuestionTag::WhereObjectBefore, atom, info.object, "", false};
            return q;
        }
        if (looks_like_person(*np, entities, atom)) {
            return Question{QuestionTag::WherePerson, atom, "", "", false};
        }
        return Question{QuestionTag::WhereObject, atom, "", "", false};
    }

    if (wh == "what") {
        if (pp == nullptr) unsupported("'what' question without a direction");
        PPInfo info = pp_info(*pp);
        std::string direction = canonical_direction(info.head);
        if (direction.empty()) {
            unsupported("'what' question with a non-directional preposition '" +
                        info.head + "'");
        }
        if (np == nullptr && !info.object.empty()) {
            // What is DIR of X?  -> the unknown sits left of the relation.
            return Question{QuestionTag::WhatDirection, "", info.object,
                            direction, true};
        }
        if (np != nullptr && info.object.empty()) {
            // What is X DIR of?  -> the unknown sits right of the relation.
            return Question{QuestionTag::WhatDirection, np_atom(*np), "",
                            direction, false};
        }
        unsupported("'what' question with both subject and object");
    }

    if (wh.empty()) {
        if (np == nullptr || pp == nullptr) {
            unsupported("yes/no question needs a subject and a relation");
        }
        PPInfo info = pp_info(*pp);
        std::string direction = canonical_direction(info.head);
        if (direction.empty() || info.object.empty()) {
            unsupported("yes/no question with a non-directional relation '" +
                        info.head + "'");
        }
        return Question{QuestionTag::YesNoPositional, np_atom(*np), info.object,
                        direction, false};
    }

    unsupported("unrecognized question word '" + wh + "'");
}

Term generate_query(const Question& question) {
    Term answer = Term::var(kAnswerVar);
    switch (question.tag) {
        case QuestionTag::WherePerson:
            return Term::compound("get_location",
                                  {Term::atom(question.entity), answer});
        case QuestionTag::WhereObject:
            return Term::compound("get_object_location",
                                  {Term::atom(question.entity), answer});
        case QuestionTag::WhereObjectBefore:
            return Term::compound("get_object_location_before",
                                  {Term::atom(question.entity),
                                   Term::atom(question.reference), answer});
        case QuestionTag::WhatDirection:
            if (question.unknown_on_left) {
                return Term::compound("get_direction",
                                      {Term::atom(question.direction), answer,
                                       Term::atom(question.reference)});
            }
            return Term::compound("get_direction",
                                  {Term::atom(question.direction),
                                   Term::atom(question.entity), answer});
        case QuestionTag::YesNoPositional:
            return Term::compound("entailed",
                                  {Term::atom(question.direction),
                                   Term::atom(question.entity),
                                   Term::atom(question.reference)});
    }
    unsupported("question with no query form");
}

std::string extract_answer(const Question& question,
                           const std::vector<Answer>& answers) {
    if (question.tag == QuestionTag::YesNoPositional) {
        return answers.empty() ? "no" : "yes";
    }
    if (answers.empty()) {
        throw Error(ErrorKind::NoAnswer, "no answer derivable for the question");
    }
    const Env& bindings = answers.front().bindings;
    auto it = bindings.find(kAnswerVar);
    if (it == bindings.end()) {
        throw Error(ErrorKind::NoAnswer, "query bound no answer variable");
    }
    Term value = walk(it->second, bindings);
    std::string text = render_term(value);
    if (text.rfind("the_", 0) == 0) text = text.substr(4);
    return text;
}

} // namespace square
