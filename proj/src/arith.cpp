#include "gentzen/arith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gentzen::fol {

namespace {

void collect(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::Zero: return;
        case Term::Kind::Var: out.insert(t.name()); return;
        case Term::Kind::Succ: collect(t.arg(), out); return;
        default:
            collect(t.lhs(), out);
            collect(t.rhs(), out);
    }
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: {
            std::set<std::string> vs;
            collect(f.lhs_term(), vs);
            collect(f.rhs_term(), vs);
            for (const auto& v : vs) {
                if (!bound.count(v)) out.insert(v);
            }
            return;
        }
        case Formula::Kind::Not: collect_free(f.sub(), bound, out); return;
        case Formula::Kind::Or:
        case Formula::Kind::And:
            collect_free(f.left(), bound, out);
            collect_free(f.right(), bound, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            bool fresh = bound.insert(f.var()).second;
            collect_free(f.sub(), bound, out);
            if (fresh) bound.erase(f.var());
            return;
        }
    }
}

bool term_has_var(const Term& t, const std::string& x) {
    switch (t.kind()) {
        case Term::Kind::Zero: return false;
        case Term::Kind::Var: return t.name() == x;
        case Term::Kind::Succ: return term_has_var(t.arg(), x);
        default: return term_has_var(t.lhs(), x) || term_has_var(t.rhs(), x);
    }
}

Formula subst_rec(const Formula& f, const std::string& x, const Term& t, const std::set<std::string>& t_vars) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
            return Formula::eq(substitute(f.lhs_term(), x, t), substitute(f.rhs_term(), x, t));
        case Formula::Kind::Gt:
            return Formula::gt(substitute(f.lhs_term(), x, t), substitute(f.rhs_term(), x, t));
        case Formula::Kind::Not: return Formula::negation(subst_rec(f.sub(), x, t, t_vars));
        case Formula::Kind::Or:
            return Formula::disjunction(subst_rec(f.left(), x, t, t_vars), subst_rec(f.right(), x, t, t_vars));
        case Formula::Kind::And:
            return Formula::conjunction(subst_rec(f.left(), x, t, t_vars), subst_rec(f.right(), x, t, t_vars));
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (f.var() == x || !occurs_free(x, f.sub())) return f;
            if (t_vars.count(f.var())) {
                throw std::invalid_argument("substituting " + print(t) + " for " + x + " would capture " + f.var());
            }
            Formula body = subst_rec(f.sub(), x, t, t_vars);
            return f.kind() == Formula::Kind::Forall ? Formula::forall(f.var(), std::move(body))
                                                     : Formula::exists(f.var(), std::move(body));
        }
    }
    return f;
}

Natural checked_add(Natural a, Natural b) {
    Natural r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("term value exceeds 64 bits");
    return r;
}

Natural checked_mul(Natural a, Natural b) {
    Natural r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("term value exceeds 64 bits");
    return r;
}

bool eval_rec(const Formula& f, Assignment& env, Natural bound) {
    switch (f.kind()) {
        case Formula::Kind::Eq: return eval_term(f.lhs_term(), env) == eval_term(f.rhs_term(), env);
        case Formula::Kind::Gt: return eval_term(f.lhs_term(), env) > eval_term(f.rhs_term(), env);
        case Formula::Kind::Not: return !eval_rec(f.sub(), env, bound);
        case Formula::Kind::Or: return eval_rec(f.left(), env, bound) || eval_rec(f.right(), env, bound);
        case Formula::Kind::And: return eval_rec(f.left(), env, bound) && eval_rec(f.right(), env, bound);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            bool universal = f.kind() == Formula::Kind::Forall;
            auto it = env.find(f.var());
            std::optional<Natural> saved;
            if (it != env.end()) saved = it->second;
            bool result = universal;
            for (Natural n = 0; n <= bound; ++n) {
                env[f.var()] = n;
                bool v = eval_rec(f.sub(), env, bound);
                if (v != universal) {
                    result = v;
                    break;
                }
            }
            if (saved) {
                env[f.var()] = *saved;
            } else {
                env.erase(f.var());
            }
            return result;
        }
    }
    return false;
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> vars(const Term& t) {
    std::set<std::string> out;
    collect(t, out);
    return out;
}

bool occurs_free(const std::string& x, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: return term_has_var(f.lhs_term(), x) || term_has_var(f.rhs_term(), x);
        case Formula::Kind::Not: return occurs_free(x, f.sub());
        case Formula::Kind::Or:
        case Formula::Kind::And: return occurs_free(x, f.left()) || occurs_free(x, f.right());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return f.var() != x && occurs_free(x, f.sub());
    }
    return false;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

Formula nnf(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: return f;
        case Formula::Kind::Or: return Formula::disjunction(nnf(f.left()), nnf(f.right()));
        case Formula::Kind::And: return Formula::conjunction(nnf(f.left()), nnf(f.right()));
        case Formula::Kind::Forall: return Formula::forall(f.var(), nnf(f.sub()));
        case Formula::Kind::Exists: return Formula::exists(f.var(), nnf(f.sub()));
        case Formula::Kind::Not: break;
    }
    const Formula& g = f.sub();
    switch (g.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: return f;
        case Formula::Kind::Not: return nnf(g.sub());
        case Formula::Kind::Or:
            return Formula::conjunction(nnf(Formula::negation(g.left())), nnf(Formula::negation(g.right())));
        case Formula::Kind::And:
            return Formula::disjunction(nnf(Formula::negation(g.left())), nnf(Formula::negation(g.right())));
        case Formula::Kind::Forall: return Formula::exists(g.var(), nnf(Formula::negation(g.sub())));
        case Formula::Kind::Exists: return Formula::forall(g.var(), nnf(Formula::negation(g.sub())));
    }
    return f;
}

bool is_nnf(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: return true;
        case Formula::Kind::Not: return f.sub().is_atomic();
        case Formula::Kind::Or:
        case Formula::Kind::And: return is_nnf(f.left()) && is_nnf(f.right());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return is_nnf(f.sub());
    }
    return false;
}

Term numeral(Natural n) {
    Term t = Term::zero();
    for (Natural i = 0; i < n; ++i) t = Term::succ(std::move(t));
    return t;
}

Term substitute(const Term& t, const std::string& x, const Term& by) {
    switch (t.kind()) {
        case Term::Kind::Zero: return t;
        case Term::Kind::Var: return t.name() == x ? by : t;
        case Term::Kind::Succ: return Term::succ(substitute(t.arg(), x, by));
        case Term::Kind::Plus: return Term::plus(substitute(t.lhs(), x, by), substitute(t.rhs(), x, by));
        case Term::Kind::Times: return Term::times(substitute(t.lhs(), x, by), substitute(t.rhs(), x, by));
    }
    return t;
}

Formula substitute(const Formula& f, const std::string& x, const Term& t) {
    if (!t.closed()) throw std::invalid_argument("substitute: term " + print(t) + " is not closed");
    return subst_rec(f, x, t, {});
}

bool is_free_for(const Term& t, const std::string& x, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: return true;
        case Formula::Kind::Not: return is_free_for(t, x, f.sub());
        case Formula::Kind::Or:
        case Formula::Kind::And: return is_free_for(t, x, f.left()) && is_free_for(t, x, f.right());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            if (f.var() == x || !occurs_free(x, f.sub())) return true;
            return !term_has_var(t, f.var()) && is_free_for(t, x, f.sub());
    }
    return true;
}

Formula substitute_free(const Formula& f, const std::string& x, const Term& t) {
    return subst_rec(f, x, t, vars(t));
}

Natural eval_term(const Term& t, const Assignment& env) {
    switch (t.kind()) {
        case Term::Kind::Zero: return 0;
        case Term::Kind::Var: {
            auto it = env.find(t.name());
            if (it == env.end()) throw std::invalid_argument("unassigned variable " + t.name());
            return it->second;
        }
        case Term::Kind::Succ: return checked_add(eval_term(t.arg(), env), 1);
        case Term::Kind::Plus: return checked_add(eval_term(t.lhs(), env), eval_term(t.rhs(), env));
        case Term::Kind::Times: return checked_mul(eval_term(t.lhs(), env), eval_term(t.rhs(), env));
    }
    return 0;
}

Natural eval_closed_term(const Term& t) {
    if (!t.closed()) throw std::invalid_argument("eval_closed_term: " + print(t) + " is not closed");
    return eval_term(t, {});
}

bool eval_atomic(const Formula& s) {
    if (!s.is_literal()) throw std::invalid_argument("eval_atomic: " + print(s) + " is not atomic");
    const Formula& atom = s.is_atomic() ? s : s.sub();
    Natural a = eval_closed_term(atom.lhs_term());
    Natural b = eval_closed_term(atom.rhs_term());
    bool v = atom.kind() == Formula::Kind::Eq ? a == b : a > b;
    return s.is_atomic() ? v : !v;
}

bool evaluate(const Formula& f, const Assignment& env, Natural bound) {
    Assignment scratch = env;
    return eval_rec(f, scratch, bound);
}

std::string to_string(const TruthB& t) {
    const char* word = t.verdict == TruthB::Verdict::True ? "TRUE" : t.verdict == TruthB::Verdict::False ? "FALSE" : "UNKNOWN";
    return std::string(word) + "@" + std::to_string(t.bound);
}

TruthB eval_bounded(const Formula& s, Natural bound) {
    if (!is_sentence(s)) return TruthB::unknown(bound);
    try {
        return evaluate(s, {}, bound) ? TruthB::true_at(bound) : TruthB::false_at(bound);
    } catch (const std::overflow_error&) {
        return TruthB::unknown(bound);
    }
}

Formula induction_instance(const Formula& phi, const std::string& x, const std::vector<std::string>& ys) {
    for (const auto& v : free_vars(phi)) {
        if (v != x && std::find(ys.begin(), ys.end(), v) == ys.end()) {
            throw std::invalid_argument("induction_instance: free variable " + v + " is neither " + x + " nor a parameter");
        }
    }
    Term xv = Term::var(x);
    Formula base = substitute_free(phi, x, Term::zero());
    Formula step = Formula::forall(x, Formula::implies(phi, substitute_free(phi, x, Term::succ(xv))));
    Formula body = Formula::implies(Formula::conjunction(std::move(base), std::move(step)), Formula::forall(x, phi));
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) body = Formula::forall(*it, std::move(body));
    return body;
}

const std::vector<Formula>& pa_axioms() {
    static const std::vector<Formula> axioms = [] {
        const char* texts[] = {
            "forall x. !(Sx = 0)",
            "forall x. forall y. (Sx = Sy -> x = y)",
            "forall x. x + 0 = x",
            "forall x. forall y. x + Sy = S(x + y)",
            "forall x. x * 0 = 0",
            "forall x. forall y. x * Sy = x * y + x",
            "forall x. forall y. (x > y -> exists z. x = y + Sz)",
            "forall x. forall y. ((exists z. x = y + Sz) -> x > y)",
        };
        std::vector<Formula> out;
        for (const char* t : texts) out.push_back(parse_formula(t));
        return out;
    }();
    return axioms;
}

}  // namespace gentzen::fol
