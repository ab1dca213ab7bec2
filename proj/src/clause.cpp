#include "square/clause.hpp"

#include <cctype>
#include <cstdlib>

#include "square/errors.hpp"

namespace square {

namespace {

struct Lexer {
    const std::string& text;
    std::string origin;
    size_t pos = 0;
    long line = 1;
    long anon_counter = 0;

    void skip_layout() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '%') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line;
                ++pos;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw Error(ErrorKind::RuleFileError, origin + ": " + message, line);
    }

    bool done() {
        skip_layout();
        return pos >= text.size();
    }

    char peek() {
        skip_layout();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool try_consume(const std::string& s) {
        skip_layout();
        if (text.compare(pos, s.size(), s) == 0) {
            pos += s.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& s) {
        if (!try_consume(s)) fail("expected '" + s + "'");
    }

    bool name_ahead() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string name() {
        skip_layout();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start) fail("expected a name");
        return text.substr(start, pos - start);
    }
};

bool is_time_name(const std::string& name, int& index) {
    if (name.size() < 2 || name[0] != 't') return false;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    }
    index = std::atoi(name.c_str() + 1);
    return true;
}

Term parse_term_at(Lexer& lex);

Term parse_list(Lexer& lex) {
    lex.expect("[");
    if (lex.try_consume("]")) return Term::nil();
    std::vector<Term> items;
    items.push_back(parse_term_at(lex));
    while (lex.try_consume(",")) items.push_back(parse_term_at(lex));
    Term tail = Term::nil();
    if (lex.try_consume("|")) tail = parse_term_at(lex);
    lex.expect("]");
    Term out = std::move(tail);
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
        out = Term::cons(std::move(*it), std::move(out));
    }
    return out;
}

Term parse_term_at(Lexer& lex) {
    if (lex.peek() == '[') return parse_list(lex);
    if (!lex.name_ahead()) lex.fail("expected a term");
    std::string word = lex.name();
    char first = word[0];
    if (std::isupper(static_cast<unsigned char>(first)) || first == '_') {
        // Each bare "_" is anonymous: a fresh variable per occurrence.
        if (word == "_") return Term::var("_G" + std::to_string(lex.anon_counter++));
        return Term::var(word);
    }
    if (lex.peek() == '(') {
        lex.expect("(");
        std::vector<Term> args;
        args.push_back(parse_term_at(lex));
        while (lex.try_consume(",")) args.push_back(parse_term_at(lex));
        lex.expect(")");
        return Term::compound(word, std::move(args));
    }
    int time_index = 0;
    if (is_time_name(word, time_index)) return Term::time_point(time_index);
    return Term::atom(word);
}

Literal parse_literal(Lexer& lex) {
    Literal lit;
    // "not" binds as negation only when followed by a term, never "not(..)".
    size_t save_pos = lex.pos;
    long save_line = lex.line;
    if (lex.name_ahead()) {
        std::string word = lex.name();
        if (word == "not" && lex.peek() != '(' && lex.peek() != ',' && lex.peek() != '.') {
            lit.negated = true;
        } else {
            lex.pos = save_pos;
            lex.line = save_line;
        }
    }
    lit.term = parse_term_at(lex);
    return lit;
}

void parse_dynamic_directive(Lexer& lex, RuleSet& out) {
    lex.expect("dynamic");
    lex.expect("(");
    while (true) {
        std::string pred = lex.name();
        lex.expect("/");
        std::string arity = lex.name();
        out.dynamic_preds.emplace(pred, static_cast<size_t>(std::atol(arity.c_str())));
        if (!lex.try_consume(",")) break;
    }
    lex.expect(")");
    lex.expect(".");
}

} // namespace

Term parse_term(const std::string& text) {
    Lexer lex{text, "<term>"};
    Term term = parse_term_at(lex);
    if (!lex.done()) lex.fail("trailing characters after term");
    return term;
}

RuleSet parse_rules(const std::string& text, const std::string& origin_name) {
    RuleSet out;
    Lexer lex{text, origin_name};
    while (!lex.done()) {
        if (lex.try_consume(":-")) {
            parse_dynamic_directive(lex, out);
            continue;
        }
        Rule rule;
        long at_line = lex.line;
        rule.head = parse_term_at(lex);
        if (rule.head.kind == Term::Kind::Var) lex.fail("clause head cannot be a variable");
        if (lex.try_consume(":-")) {
            rule.body.push_back(parse_literal(lex));
            while (lex.try_consume(",")) rule.body.push_back(parse_literal(lex));
        }
        lex.expect(".");
        rule.origin = origin_name + ":" + std::to_string(at_line);
        out.rules.push_back(std::move(rule));
    }
    return out;
}

std::string render_rule(const Rule& rule) {
    std::string out = render_term(rule.head);
    if (!rule.body.empty()) {
        out += " :- ";
        for (size_t i = 0; i < rule.body.size(); ++i) {
            if (i) out += ", ";
            if (rule.body[i].negated) out += "not ";
            out += render_term(rule.body[i].term);
        }
    }
    out += ".";
    return out;
}

} // namespace square
