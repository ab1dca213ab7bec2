#include "square/term.hpp"

namespace square {

Term Term::list(const std::vector<Term>& items) {
    Term out = nil();
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
        out = cons(*it, std::move(out));
    }
    return out;
}

bool Term::operator==(const Term& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Atom:
        case Kind::Var: return text == other.text;
        case Kind::Time: return time == other.time;
        case Kind::Compound: return text == other.text && args == other.args;
    }
    return false;
}

namespace {

void render(const Term& term, std::string& out) {
    switch (term.kind) {
        case Term::Kind::Atom:
        case Term::Kind::Var:
            out += term.text;
            return;
        case Term::Kind::Time:
            out += 't';
            out += std::to_string(term.time);
            return;
        case Term::Kind::Compound: break;
    }
    if (term.is_cons()) {
        out += '[';
        const Term* node = &term;
        bool first = true;
        while (node->is_cons()) {
            if (!first) out += ", ";
            render(node->args[0], out);
            first = false;
            node = &node->args[1];
        }
        if (!node->is_nil()) {
            out += " | ";
            render(*node, out);
        }
        out += ']';
        return;
    }
    out += term.text;
    out += '(';
    for (size_t i = 0; i < term.args.size(); ++i) {
        if (i) out += ", ";
        render(term.args[i], out);
    }
    out += ')';
}

void render_variant(const Term& term, const Env& env, std::map<std::string, int>& names,
                    std::string& out) {
    const Term& t = walk(term, env);
    if (t.kind == Term::Kind::Var) {
        auto [it, inserted] = names.emplace(t.text, static_cast<int>(names.size()));
        out += '_';
        out += std::to_string(it->second);
        return;
    }
    if (t.kind == Term::Kind::Compound) {
        out += t.text;
        out += '(';
        for (size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ',';
            render_variant(t.args[i], env, names, out);
        }
        out += ')';
        return;
    }
    render(t, out);
}

} // namespace

std::string render_term(const Term& term) {
    std::string out;
    render(term, out);
    return out;
}

const Term& walk(const Term& term, const Env& env) {
    const Term* t = &term;
    while (t->kind == Term::Kind::Var) {
        auto it = env.find(t->text);
        if (it == env.end()) break;
        t = &it->second;
    }
    return *t;
}

Term resolve(const Term& term, const Env& env) {
    const Term& t = walk(term, env);
    if (t.kind != Term::Kind::Compound) return t;
    Term out = t;
    for (auto& arg : out.args) arg = resolve(arg, env);
    return out;
}

bool unify(const Term& a, const Term& b, Env& env) {
    const Term& x = walk(a, env);
    const Term& y = walk(b, env);
    if (x.kind == Term::Kind::Var) {
        if (y.kind == Term::Kind::Var && y.text == x.text) return true;
        env[x.text] = y;
        return true;
    }
    if (y.kind == Term::Kind::Var) {
        env[y.text] = x;
        return true;
    }
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Term::Kind::Atom: return x.text == y.text;
        case Term::Kind::Time: return x.time == y.time;
        case Term::Kind::Compound: {
            if (x.text != y.text || x.args.size() != y.args.size()) return false;
            // Copy: walk references may dangle once env grows.
            Term xc = x, yc = y;
            for (size_t i = 0; i < xc.args.size(); ++i) {
                if (!unify(xc.args[i], yc.args[i], env)) return false;
            }
            return true;
        }
        case Term::Kind::Var: break;
    }
    return false;
}

bool is_ground(const Term& term, const Env& env) {
    const Term& t = walk(term, env);
    if (t.kind == Term::Kind::Var) return false;
    if (t.kind == Term::Kind::Compound) {
        for (const auto& arg : t.args) {
            if (!is_ground(arg, env)) return false;
        }
    }
    return true;
}

std::string canonical_variant(const Term& term, const Env& env) {
    std::map<std::string, int> names;
    std::string out;
    render_variant(term, env, names, out);
    return out;
}

bool list_elements(const Term& term, const Env& env, std::vector<Term>& out) {
    const Term* node = &walk(term, env);
    Term current = *node;
    while (true) {
        if (current.is_nil()) return true;
        if (!current.is_cons()) return false;
        out.push_back(resolve(current.args[0], env));
        current = walk(current.args[1], env);
    }
}

} // namespace square
