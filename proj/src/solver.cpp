#include "square/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "square/errors.hpp"

namespace square {

namespace {

const std::set<std::pair<std::string, std::size_t>> kBuiltins = {
    {"after", 2},
    {"prev_time", 2},
    {"get_all_times", 1},
    {"filter_times", 3},
    {"filtered_possession_times", 3},
    {"get_max_time", 2},
    {"get_sublist_times", 2},
};

Term rename_term(const Term& term, const std::string& suffix) {
    switch (term.kind) {
        case Term::Kind::Var: {
            Term t = term;
            t.text += suffix;
            return t;
        }
        case Term::Kind::Compound: {
            Term t = term;
            for (Term& arg : t.args) arg = rename_term(arg, suffix);
            return t;
        }
        default:
            return term;
    }
}

void collect_vars(const Term& term, std::vector<std::string>& out) {
    if (term.kind == Term::Kind::Var) {
        if (std::find(out.begin(), out.end(), term.text) == out.end()) {
            out.push_back(term.text);
        }
    } else if (term.kind == Term::Kind::Compound) {
        for (const Term& arg : term.args) collect_vars(arg, out);
    }
}

void collect_times(const Term& term, std::set<int>& out) {
    if (term.kind == Term::Kind::Time) {
        out.insert(term.time);
    } else if (term.kind == Term::Kind::Compound) {
        for (const Term& arg : term.args) collect_times(arg, out);
    }
}

/// The resolution engine. One instance per solve() call; owns the mutable
/// search state (call stack, rename counter) over an immutable program.
class Engine {
  public:
    Engine(const Program& program, const Limits& limits)
        : program_(program), limits_(limits) {
        for (const Term& fact : program.facts) {
            fact_store_.push_back(Rule{fact, {}, "story"});
        }
        for (const Rule& fact : fact_store_) add_clause(fact);
        for (const Rule& rule : program.rules) add_clause(rule);
        for (const Term& t : program.timeline) {
            if (t.kind == Term::Kind::Time) timeline_.push_back(t.time);
        }
        std::sort(timeline_.begin(), timeline_.end());
        timeline_.erase(std::unique(timeline_.begin(), timeline_.end()),
                        timeline_.end());
    }

    /// Continuation receives the extended environment and the proof of the
    /// goal; returning true stops the whole search (answer cap reached).
    using Cont = std::function<bool(Env&, JustificationNode&&)>;

    bool solve_goal(const Term& goal, const Env& env, std::size_t depth,
                    const Cont& k) {
        if (depth > limits_.max_depth) {
            throw Error(ErrorKind::DepthExceeded,
                        "call depth limit " + std::to_string(limits_.max_depth) +
                            " exceeded at goal " + render_term(resolve(goal, env)));
        }
        const Term& peeked = walk(goal, env);
        if (peeked.kind == Term::Kind::Var) {
            throw Error(ErrorKind::Floundering,
                        "cannot call unbound goal variable " + peeked.text);
        }
        std::size_t arity =
            peeked.kind == Term::Kind::Compound ? peeked.args.size() : 0;
        if (kBuiltins.count({peeked.text, arity})) {
            return call_builtin(peeked, env, depth, k);
        }

        // Variant loop check: a positive goal recurring inside its own
        // derivation is failed instead of looping forever.  A goal counts
        // as open only while its proof is being built: once it succeeds
        // the key is withdrawn for the duration of the continuation, so
        // later conjuncts may re-derive the same instance, and restored
        // when the search backtracks into the remaining alternatives.
        std::string key = canonical_variant(goal, env);
        if (open_.count(key) != 0) return false;
        auto slot = open_.insert(key);
        Cont resume = [&](Env& env2, JustificationNode&& proof) {
            open_.erase(slot);
            bool stop = k(env2, std::move(proof));
            slot = open_.insert(key);
            return stop;
        };
        bool stopped = false;
        for (const Rule* clause : candidate_clauses(peeked, env)) {
            Rule fresh = rename_clause(*clause);
            Env env2 = env;
            if (!unify(goal, fresh.head, env2)) continue;
            if (fresh.body.empty()) {
                JustificationNode node;
                node.kind = JustificationNode::Kind::Fact;
                if (clause->origin != "story") node.rule_origin = clause->origin;
                node.goal = resolve(goal, env2);
                stopped = resume(env2, std::move(node));
            } else {
                stopped = solve_body(goal, fresh, 0, env2, depth, {}, resume);
            }
            if (stopped) break;
        }
        open_.erase(slot);
        return stopped;
    }

    /// True iff the goal has at least one solution (used by negation and the
    /// meta-call builtins; proof and bindings are discarded).
    bool provable(const Term& goal, const Env& env, std::size_t depth) {
        return solve_goal(goal, env, depth,
                          [](Env&, JustificationNode&&) { return true; });
    }

    std::vector<Env> eval_builtin_goal(const Term& goal, const Env& env,
                                       std::size_t depth) {
        std::vector<Env> out;
        const Term& g = walk(goal, env);
        const std::string& f = g.text;
        std::size_t n = g.kind == Term::Kind::Compound ? g.args.size() : 0;

        auto arg = [&](std::size_t i) -> const Term& { return walk(g.args[i], env); };
        auto require_bound = [&](std::size_t i, const char* what) -> const Term& {
            const Term& t = arg(i);
            if (t.kind == Term::Kind::Var) {
                throw Error(ErrorKind::Floundering,
                            f + "/" + std::to_string(n) + " requires a bound " +
                                what + ", got unbound " + t.text + " in goal " +
                                render_term(resolve(goal, env)));
            }
            return t;
        };
        auto emit = [&](std::size_t i, const Term& value) {
            Env env2 = env;
            if (unify(g.args[i], value, env2)) out.push_back(std::move(env2));
        };

        if (f == "after" && n == 2) {
            const Term& t2 = require_bound(0, "time");
            if (t2.kind != Term::Kind::Time) return out;
            const Term& t1 = arg(1);
            if (t1.kind == Term::Kind::Var) {
                // Enumerate earlier times, latest first.
                for (auto it = timeline_.rbegin(); it != timeline_.rend(); ++it) {
                    if (*it < t2.time) emit(1, Term::time_point(*it));
                }
            } else if (t1.kind == Term::Kind::Time && t2.time > t1.time) {
                out.push_back(env);
            }
            return out;
        }
        if (f == "prev_time" && n == 2) {
            const Term& t2 = require_bound(0, "time");
            if (t2.kind != Term::Kind::Time) return out;
            auto it = std::find(timeline_.begin(), timeline_.end(), t2.time);
            if (it == timeline_.end() || it == timeline_.begin()) return out;
            emit(1, Term::time_point(*std::prev(it)));
            return out;
        }
        if (f == "get_all_times" && n == 1) {
            emit(0, timeline_list(timeline_.size()));
            return out;
        }
        if (f == "get_max_time" && n == 2) {
            require_bound(0, "list");
            std::vector<Term> items;
            if (!list_elements(g.args[0], env, items) || items.empty()) return out;
            emit(1, items.back());
            return out;
        }
        if (f == "get_sublist_times" && n == 2) {
            const Term& max = require_bound(0, "time");
            if (max.kind != Term::Kind::Time) return out;
            auto it = std::find(timeline_.begin(), timeline_.end(), max.time);
            if (it == timeline_.end()) return out;
            emit(1, timeline_list(static_cast<std::size_t>(it - timeline_.begin()) + 1));
            return out;
        }
        if (f == "filter_times" && n == 3) {
            // Times at which a location-establishing event by Per occurs.
            const Term& per = require_bound(0, "entity");
            require_bound(1, "list of times");
            std::vector<Term> times;
            if (!list_elements(g.args[1], env, times)) return out;
            std::vector<Term> kept;
            for (const Term& t : times) {
                Term probe = Term::compound(
                    "location_event", {t, per, fresh_var()});
                if (provable(probe, env, depth + 1)) kept.push_back(t);
            }
            emit(2, Term::list(kept));
            return out;
        }
        if (f == "filtered_possession_times" && n == 3) {
            // Times at which somebody possesses Obj (inertia included).
            const Term& obj = require_bound(0, "entity");
            require_bound(1, "list of times");
            std::vector<Term> times;
            if (!list_elements(g.args[1], env, times)) return out;
            std::vector<Term> kept;
            for (const Term& t : times) {
                Term probe = Term::compound(
                    "property",
                    {Term::atom("possession"), t, fresh_var(), obj});
                if (provable(probe, env, depth + 1)) kept.push_back(t);
            }
            emit(2, Term::list(kept));
            return out;
        }
        throw Error(ErrorKind::UnknownRuleSet,
                    "internal: not a builtin: " + f + "/" + std::to_string(n));
    }

  private:
    void add_clause(const Rule& clause) {
        PredEntry& entry = index_[{clause.head.text, clause.head.args.size()}];
        entry.clauses.push_back(&clause);
        if (!clause.body.empty() || clause.head.args.empty() ||
            !is_ground(clause.head, Env{})) {
            entry.plain_facts = false;
        } else {
            entry.by_first_arg[render_term(clause.head.args[0])].push_back(&clause);
        }
    }

    /// Clauses worth trying for the goal, in load order. When the predicate
    /// holds only ground facts and the goal's first argument is ground,
    /// the first-argument bucket narrows the scan.
    const std::vector<const Rule*>& candidate_clauses(const Term& goal,
                                                      const Env& env) {
        static const std::vector<const Rule*> kNone;
        std::size_t arity =
            goal.kind == Term::Kind::Compound ? goal.args.size() : 0;
        auto it = index_.find({goal.text, arity});
        if (it == index_.end()) return kNone;
        PredEntry& entry = it->second;
        if (entry.plain_facts && arity > 0) {
            Term first = resolve(goal.args[0], env);
            if (is_ground(first, Env{})) {
                auto bucket = entry.by_first_arg.find(render_term(first));
                return bucket == entry.by_first_arg.end() ? kNone : bucket->second;
            }
        }
        return entry.clauses;
    }

    bool call_builtin(const Term& goal, const Env& env, std::size_t depth,
                      const Cont& k) {
        for (Env& env2 : eval_builtin_goal(goal, env, depth)) {
            JustificationNode node;
            node.kind = JustificationNode::Kind::Builtin;
            node.goal = resolve(goal, env2);
            if (k(env2, std::move(node))) return true;
        }
        return false;
    }

    /// Prove body literals left to right from position idx, accumulating the
    /// children proofs; on completion build the rule node and continue.
    bool solve_body(const Term& goal, const Rule& clause, std::size_t idx,
                    const Env& env, std::size_t depth,
                    std::vector<JustificationNode> children, const Cont& k) {
        if (idx == clause.body.size()) {
            JustificationNode node;
            node.kind = JustificationNode::Kind::Rule;
            node.goal = resolve(goal, env);
            node.rule_origin = clause.origin;
            node.children = std::move(children);
            Env env2 = env;
            return k(env2, std::move(node));
        }
        const Literal& lit = clause.body[idx];
        if (lit.negated) {
            Term g = resolve(lit.term, env);
            if (!is_ground(g, env)) {
                throw Error(ErrorKind::Floundering,
                            "negation applied to non-ground goal not " +
                                render_term(g));
            }
            if (provable(g, env, depth + 1)) return false;
            JustificationNode node;
            node.kind = JustificationNode::Kind::NafSuccess;
            node.goal = std::move(g);
            children.push_back(std::move(node));
            return solve_body(goal, clause, idx + 1, env, depth,
                              std::move(children), k);
        }
        return solve_goal(
            lit.term, env, depth + 1,
            [&](Env& env2, JustificationNode&& proof) {
                std::vector<JustificationNode> next = children;
                next.push_back(std::move(proof));
                return solve_body(goal, clause, idx + 1, env2, depth,
                                  std::move(next), k);
            });
    }

    Rule rename_clause(const Rule& clause) {
        std::string suffix = "~" + std::to_string(++rename_counter_);
        Rule fresh;
        fresh.head = rename_term(clause.head, suffix);
        fresh.body.reserve(clause.body.size());
        for (const Literal& lit : clause.body) {
            fresh.body.push_back(Literal{lit.negated, rename_term(lit.term, suffix)});
        }
        fresh.origin = clause.origin;
        return fresh;
    }

    Term fresh_var() { return Term::var("_Meta~" + std::to_string(++rename_counter_)); }

    Term timeline_list(std::size_t prefix_len) const {
        std::vector<Term> items;
        items.reserve(prefix_len);
        for (std::size_t i = 0; i < prefix_len && i < timeline_.size(); ++i) {
            items.push_back(Term::time_point(timeline_[i]));
        }
        return Term::list(items);
    }

    struct PredEntry {
        std::vector<const Rule*> clauses;
        bool plain_facts = true;   // every clause a ground fact
        std::map<std::string, std::vector<const Rule*>> by_first_arg;
    };

    const Program& program_;
    Limits limits_;
    std::vector<Rule> fact_store_;
    std::map<std::pair<std::string, std::size_t>, PredEntry> index_;
    std::vector<int> timeline_;
    std::multiset<std::string> open_;  // canonical variants of in-progress goals
    long rename_counter_ = 0;
};

} // namespace

std::vector<Term> timeline_from_facts(const std::vector<Term>& facts) {
    std::set<int> indices;
    for (const Term& fact : facts) collect_times(fact, indices);
    std::vector<Term> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(Term::time_point(i));
    return out;
}

bool is_builtin(const std::string& functor, std::size_t arity) {
    return kBuiltins.count({functor, arity}) > 0;
}

std::vector<Answer> solve(const Term& query, const Program& program,
                          const Limits& limits) {
    Engine engine(program, limits);
    std::vector<std::string> query_vars;
    collect_vars(query, query_vars);

    std::vector<Answer> answers;
    std::set<std::string> seen;
    engine.solve_goal(
        query, Env{}, 1,
        [&](Env& env, JustificationNode&& proof) {
            Env bindings;
            std::string key;
            for (const std::string& name : query_vars) {
                Term value = resolve(Term::var(name), env);
                key += name + "=" + render_term(value) + ";";
                bindings.emplace(name, std::move(value));
            }
            if (!seen.insert(key).second) return false;
            answers.push_back(Answer{std::move(bindings), std::move(proof)});
            return limits.max_answers != 0 && answers.size() >= limits.max_answers;
        });
    return answers;
}

std::vector<Env> eval_builtin(const Term& goal, const Program& program) {
    if (goal.kind != Term::Kind::Compound ||
        !is_builtin(goal.text, goal.args.size())) {
        throw Error(ErrorKind::UnknownRuleSet,
                    "not a builtin goal: " + render_term(goal));
    }
    Engine engine(program, Limits{});
    return engine.eval_builtin_goal(goal, Env{}, 1);
}

std::string render_justification(const JustificationNode& node,
                                 std::size_t max_depth) {
    std::string out = "BEGIN JUSTIFICATION\n";
    std::function<void(const JustificationNode&, std::size_t)> emit =
        [&](const JustificationNode& n, std::size_t level) {
            if (max_depth != 0 && level > max_depth) return;
            out.append(2 * level, ' ');
            if (n.kind == JustificationNode::Kind::NafSuccess) out += "not ";
            out += render_term(n.goal);
            out += '\n';
            for (const JustificationNode& child : n.children) emit(child, level + 1);
        };
    emit(node, 1);
    out += "END JUSTIFICATION\n";
    return out;
}

} // namespace square
