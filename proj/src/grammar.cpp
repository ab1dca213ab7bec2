#include "square/grammar.hpp"

#include "square/errors.hpp"

namespace square {

namespace {

struct Parser {
    const std::vector<Token>& tokens;
    size_t pos = 0;

    bool done() const { return pos >= tokens.size(); }
    const Token& peek() const { return tokens[pos]; }
    const Token& take() { return tokens[pos++]; }

    bool at(const char* tag) const { return !done() && peek().pos == tag; }
    bool at_punct() const { return at("."); }

    [[noreturn]] void fail(const std::string& message) const {
        std::string detail = message;
        if (!done()) detail += " near '" + peek().text + "'";
        throw Error(ErrorKind::UnsupportedSyntax, detail, static_cast<long>(pos));
    }

    ParseTree leaf() {
        const Token& token = take();
        return ParseTree::leaf(token.pos, token.text);
    }

    ParseTree noun_phrase() {
        std::vector<ParseTree> parts;
        if (at("NNP")) {
            parts.push_back(leaf());
        } else if (at("DT")) {
            parts.push_back(leaf());
            while (at("JJ")) parts.push_back(leaf());
            if (!at("NN")) fail("determiner without noun");
            parts.push_back(leaf());
        } else if (at("NN")) {
            parts.push_back(leaf());
        } else {
            fail("expected noun phrase");
        }
        return ParseTree::node("NP", std::move(parts));
    }

    ParseTree prep_phrase(bool allow_stranded) {
        std::vector<ParseTree> parts;
        parts.push_back(leaf()); // IN
        if (at("NNP") || at("DT") || at("NN")) {
            parts.push_back(noun_phrase());
        } else if (!allow_stranded) {
            fail("preposition without object");
        }
        return ParseTree::node("PP", std::move(parts));
    }

    ParseTree adverb_phrase() {
        return ParseTree::node("ADVP", {leaf()});
    }

    ParseTree verb_phrase() {
        std::vector<ParseTree> parts;
        bool copular = peek().lemma == "be";
        parts.push_back(leaf()); // VBD / VBZ

        if (copular) {
            if (at("IN")) {
                parts.push_back(prep_phrase(false));
            } else if (at("JJ")) {
                parts.push_back(ParseTree::node("ADJP", {leaf()}));
            } else {
                fail("copula needs PP or ADJP complement");
            }
            if (!done() && !at_punct()) fail("unexpected token after copular complement");
            return ParseTree::node("VP", std::move(parts));
        }

        bool have_object = false;
        while (!done() && !at_punct()) {
            if (at("RB")) {
                parts.push_back(adverb_phrase());
            } else if (at("IN")) {
                parts.push_back(prep_phrase(false));
            } else if (at("NNP") || at("DT") || at("NN")) {
                if (have_object) fail("more than one object noun phrase");
                parts.push_back(noun_phrase());
                have_object = true;
            } else {
                fail("unexpected token in verb phrase");
            }
        }
        return ParseTree::node("VP", std::move(parts));
    }

    ParseTree declarative() {
        std::vector<ParseTree> parts;
        parts.push_back(noun_phrase());
        if (!at("VBD") && !at("VBZ")) fail("expected a verb");
        parts.push_back(verb_phrase());
        if (at_punct()) parts.push_back(leaf());
        if (!done()) fail("trailing tokens after sentence");
        return ParseTree::node("S", std::move(parts));
    }

    ParseTree clause_after_aux() {
        // Shared SQ tail: auxiliary verb, then NP and/or PP complements.
        std::vector<ParseTree> parts;
        parts.push_back(leaf()); // VBZ / VBD form of "be"
        while (!done() && !at_punct()) {
            if (at("IN")) {
                parts.push_back(prep_phrase(true));
            } else if (at("NNP") || at("DT") || at("NN")) {
                parts.push_back(noun_phrase());
            } else {
                fail("unexpected token in question clause");
            }
        }
        return ParseTree::node("SQ", std::move(parts));
    }

    ParseTree question() {
        std::vector<ParseTree> parts;
        if (at("WRB")) {
            parts.push_back(ParseTree::node("WHADVP", {leaf()}));
            if (!at("VBZ") && !at("VBD")) fail("expected copula after wh-word");
            parts.push_back(clause_after_aux());
        } else if (at("WP")) {
            parts.push_back(ParseTree::node("WHNP", {leaf()}));
            if (!at("VBZ") && !at("VBD")) fail("expected copula after wh-word");
            parts.push_back(clause_after_aux());
        } else {
            parts.push_back(clause_after_aux());
        }
        if (at_punct()) parts.push_back(leaf());
        if (!done()) fail("trailing tokens after question");
        return ParseTree::node("SBARQ", std::move(parts));
    }
};

} // namespace

ParseTree parse_sentence(const std::vector<Token>& tokens) {
    if (tokens.empty()) throw Error(ErrorKind::EmptySentence, "no tokens");
    Parser parser{tokens};
    bool interrogative = parser.at("WRB") || parser.at("WP") ||
                         (parser.at("VBZ") && tokens[0].lemma == "be") ||
                         (parser.at("VBD") && tokens[0].lemma == "be");
    ParseTree body = interrogative ? parser.question() : parser.declarative();
    return ParseTree::node("ROOT", {std::move(body)});
}

} // namespace square
