#include "bottom_up.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "square/clause.hpp"

namespace square::testsupport {

namespace {

/// Head shapes closed by one wave.  For property/neg_property the first
/// argument distinguishes the possession and location families, which sit in
/// different strata (location inertia negates moved, which needs possession).
struct WaveKey {
    std::string functor;
    std::size_t arity;
    std::string first_atom;  // empty = any first argument
};

const std::vector<std::vector<WaveKey>>& wave_schedule() {
    static const std::vector<std::vector<WaveKey>> waves = {
        {{"possession_event", 3, ""}, {"location_event", 3, ""}},
        {{"neg_property", 4, "possession"}},
        {{"property", 4, "possession"}},
        {{"moved", 2, ""}},
        {{"neg_property", 4, "location"}},
        {{"property", 4, "location"}},
    };
    return waves;
}

/// Position of the timestamp argument in a wave head.
std::size_t time_arg_index(const std::string& functor) {
    return (functor == "property" || functor == "neg_property") ? 1 : 0;
}

bool rule_in_wave(const Rule& rule, const WaveKey& key) {
    if (rule.head.text != key.functor || rule.head.args.size() != key.arity) {
        return false;
    }
    if (key.first_atom.empty()) return true;
    const Term& first = rule.head.args[0];
    return first.kind == Term::Kind::Atom && first.text == key.first_atom;
}

struct Model {
    std::set<std::string> atoms;
    std::map<std::pair<std::string, std::size_t>, std::vector<Term>> by_pred;

    bool add(const Term& fact) {
        if (!atoms.insert(render_term(fact)).second) return false;
        by_pred[{fact.text, fact.args.size()}].push_back(fact);
        return true;
    }
    bool contains(const Term& ground) const {
        return atoms.count(render_term(ground)) != 0;
    }
    const std::vector<Term>& facts_of(const std::string& functor,
                                      std::size_t arity) const {
        static const std::vector<Term> kNone;
        auto it = by_pred.find({functor, arity});
        return it == by_pred.end() ? kNone : it->second;
    }
};

void collect_atoms(const Term& term, std::set<std::string>& out) {
    if (term.kind == Term::Kind::Atom) {
        out.insert(term.text);
    } else if (term.kind == Term::Kind::Compound) {
        for (const Term& arg : term.args) collect_atoms(arg, out);
    }
}

void collect_free_vars(const Term& term, const Env& env,
                       std::vector<std::string>& out) {
    const Term& t = walk(term, env);
    if (t.kind == Term::Kind::Var) {
        if (std::find(out.begin(), out.end(), t.text) == out.end()) {
            out.push_back(t.text);
        }
    } else if (t.kind == Term::Kind::Compound) {
        for (const Term& arg : t.args) collect_free_vars(arg, env, out);
    }
}

class Evaluator {
  public:
    Evaluator(const Program& program) {
        for (const Term& fact : program.facts) {
            model_.add(fact);
            collect_atoms(fact, universe_);
        }
        for (const Rule& rule : program.rules) {
            if (rule.body.empty()) {
                model_.add(rule.head);
                collect_atoms(rule.head, universe_);
            }
        }
        for (const Term& t : program.timeline) {
            if (t.kind == Term::Kind::Time) timeline_.push_back(t.time);
        }
        std::sort(timeline_.begin(), timeline_.end());
        timeline_.erase(std::unique(timeline_.begin(), timeline_.end()),
                        timeline_.end());

        const auto& schedule = wave_schedule();
        wave_rules_.resize(schedule.size());
        for (const Rule& rule : program.rules) {
            if (rule.body.empty()) continue;
            for (std::size_t w = 0; w < schedule.size(); ++w) {
                for (const WaveKey& key : schedule[w]) {
                    if (rule_in_wave(rule, key)) wave_rules_[w].push_back(&rule);
                }
            }
        }
    }

    GroundModel run() {
        for (int t : timeline_) {
            for (const auto& rules : wave_rules_) {
                bool changed = true;
                while (changed) {  // within-wave positive recursion
                    changed = false;
                    for (const Rule* rule : rules) {
                        if (fire(*rule, t)) changed = true;
                    }
                }
            }
        }
        GroundModel out;
        out.atoms = model_.atoms;
        out.derived = std::move(derived_);
        return out;
    }

  private:
    /// Fires every instantiation of the rule whose head timestamp is t.
    /// Returns true when at least one new fact was added.
    bool fire(const Rule& rule, int t) {
        Env seed;
        std::size_t pos = time_arg_index(rule.head.text);
        if (!unify(rule.head.args[pos], Term::time_point(t), seed)) return false;
        new_fact_ = false;
        join(rule, 0, seed);
        return new_fact_;
    }

    void join(const Rule& rule, std::size_t idx, const Env& env) {
        if (idx == rule.body.size()) {
            Term head = resolve(rule.head, env);
            if (!is_ground(head, Env{})) {
                throw std::runtime_error("bottom-up: non-ground head from " +
                                         render_rule(rule));
            }
            if (model_.add(head)) {
                derived_.push_back(std::move(head));
                new_fact_ = true;
            }
            return;
        }
        const Literal& lit = rule.body[idx];
        Term g = resolve(lit.term, env);
        if (lit.negated) {
            // Ground any leftover variables over the atom universe, then
            // check absence; finished strata make this sound.
            std::vector<std::string> free;
            collect_free_vars(g, env, free);
            ground_negation(rule, idx, env, g, free, 0);
            return;
        }
        if (g.kind == Term::Kind::Compound && g.text == "prev_time" &&
            g.args.size() == 2) {
            const Term& t2 = walk(g.args[0], env);
            if (t2.kind != Term::Kind::Time) {
                throw std::runtime_error("bottom-up: prev_time needs a bound "
                                         "time in " + render_rule(rule));
            }
            auto it = std::find(timeline_.begin(), timeline_.end(), t2.time);
            if (it == timeline_.end() || it == timeline_.begin()) return;
            Env env2 = env;
            if (unify(g.args[1], Term::time_point(*std::prev(it)), env2)) {
                join(rule, idx + 1, env2);
            }
            return;
        }
        if (is_builtin(g.text, g.args.size())) {
            throw std::runtime_error("bottom-up: unsupported builtin " +
                                     g.text + " in " + render_rule(rule));
        }
        for (const Term& fact : model_.facts_of(g.text, g.args.size())) {
            Env env2 = env;
            if (unify(g, fact, env2)) join(rule, idx + 1, env2);
        }
    }

    void ground_negation(const Rule& rule, std::size_t idx, const Env& env,
                         const Term& g, const std::vector<std::string>& free,
                         std::size_t v) {
        if (v == free.size()) {
            if (!model_.contains(resolve(g, env))) join(rule, idx + 1, env);
            return;
        }
        for (const std::string& atom : universe_) {
            Env env2 = env;
            if (unify(Term::var(free[v]), Term::atom(atom), env2)) {
                ground_negation(rule, idx, env2, g, free, v + 1);
            }
        }
    }

    Model model_;
    std::set<std::string> universe_;
    std::vector<int> timeline_;
    std::vector<std::vector<const Rule*>> wave_rules_;
    std::vector<Term> derived_;
    bool new_fact_ = false;
};

} // namespace

bool GroundModel::holds(const Term& ground_goal) const {
    return atoms.count(render_term(ground_goal)) != 0;
}

std::vector<Term> GroundModel::instances(const std::string& functor,
                                         std::size_t arity) const {
    std::vector<Term> out;
    for (const Term& fact : derived) {
        if (fact.text == functor && fact.args.size() == arity) {
            out.push_back(fact);
        }
    }
    return out;
}

GroundModel bottom_up_model(const Program& program) {
    return Evaluator(program).run();
}

} // namespace square::testsupport
