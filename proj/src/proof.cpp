#include "gentzen/proof.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gentzen/arith.hpp"

namespace gentzen::proof {

using fol::print;
using fol::Term;
using K = Formula::Kind;

namespace {

const char* const kSchemaNames[kSchemaCount] = {
    "L1", "L2", "L3", "DN", "ExFalso", "AndL", "AndR", "AndI", "OrL", "OrR", "OrE",
    "Q1", "Q2", "Q3", "Q4",
    "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9",
};

// f = !a | b
bool imp(const Formula& f, Formula& a, Formula& b) {
    if (f.kind() != K::Or || f.left().kind() != K::Not) return false;
    a = f.left().sub();
    b = f.right();
    return true;
}

bool is_kind(const Formula& f, K k) { return f.kind() == k; }

bool eq_atom(const Formula& f, Term& s, Term& t) {
    if (f.kind() != K::Eq) return false;
    s = f.lhs_term();
    t = f.rhs_term();
    return true;
}

// Finds t with a[t/x] == b at the term level.
bool match_term(const Term& a, const std::string& x, const Term& b, std::optional<Term>& t) {
    if (a.kind() == Term::Kind::Var && a.name() == x) {
        if (t) return *t == b;
        t = b;
        return true;
    }
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::Zero: return true;
        case Term::Kind::Var: return a.name() == b.name();
        case Term::Kind::Succ: return match_term(a.arg(), x, b.arg(), t);
        default: return match_term(a.lhs(), x, b.lhs(), t) && match_term(a.rhs(), x, b.rhs(), t);
    }
}

bool match_formula(const Formula& a, const std::string& x, const Formula& b, std::optional<Term>& t) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case K::Eq:
        case K::Gt:
            return match_term(a.lhs_term(), x, b.lhs_term(), t) && match_term(a.rhs_term(), x, b.rhs_term(), t);
        case K::Not: return match_formula(a.sub(), x, b.sub(), t);
        case K::Or:
        case K::And: return match_formula(a.left(), x, b.left(), t) && match_formula(a.right(), x, b.right(), t);
        case K::Forall:
        case K::Exists:
            if (a.var() != b.var()) return false;
            if (a.var() == x) return a.sub() == b.sub();
            return match_formula(a.sub(), x, b.sub(), t);
    }
    return false;
}

// b is a[t/x] for some t free for x in a.
bool is_substitution_instance(const Formula& a, const std::string& x, const Formula& b) {
    std::optional<Term> t;
    if (!match_formula(a, x, b, t)) return false;
    return !t || fol::is_free_for(*t, x, a);
}

bool match_schema(Schema s, const Formula& f) {
    Formula a, b, c, d, e, g;
    Term s1, t1, s2, t2;
    switch (s) {
        case Schema::L1:
            // A -> (B -> A)
            return imp(f, a, b) && imp(b, c, d) && d == a;
        case Schema::L2:
            // (A -> (B -> C)) -> ((A -> B) -> (A -> C))
            if (!imp(f, a, b)) return false;
            {
                Formula A, BC, B, C, AB, AC, A2, B2, A3, C3;
                return imp(a, A, BC) && imp(BC, B, C) && imp(b, AB, AC) && imp(AB, A2, B2) && imp(AC, A3, C3) &&
                       A2 == A && B2 == B && A3 == A && C3 == C;
            }
        case Schema::L3:
            // (!A -> !B) -> (B -> A)
            if (!imp(f, a, b) || !imp(a, c, d) || !imp(b, e, g)) return false;
            return is_kind(c, K::Not) && is_kind(d, K::Not) && c.sub() == g && d.sub() == e;
        case Schema::DN:
            // !!A -> A
            return imp(f, a, b) && is_kind(a, K::Not) && is_kind(a.sub(), K::Not) && a.sub().sub() == b;
        case Schema::ExFalso:
            // !A -> (A -> B)
            return imp(f, a, b) && is_kind(a, K::Not) && imp(b, c, d) && c == a.sub();
        case Schema::AndL:
            return imp(f, a, b) && is_kind(a, K::And) && a.left() == b;
        case Schema::AndR:
            return imp(f, a, b) && is_kind(a, K::And) && a.right() == b;
        case Schema::AndI:
            // A -> (B -> (A & B))
            return imp(f, a, b) && imp(b, c, d) && is_kind(d, K::And) && d.left() == a && d.right() == c;
        case Schema::OrL:
            return imp(f, a, b) && is_kind(b, K::Or) && b.left() == a;
        case Schema::OrR:
            return imp(f, a, b) && is_kind(b, K::Or) && b.right() == a;
        case Schema::OrE: {
            // (A -> C) -> ((B -> C) -> ((A | B) -> C))
            Formula A, C, BC, rest, B, C2, AB, C3;
            if (!imp(f, a, b) || !imp(a, A, C) || !imp(b, BC, rest) || !imp(BC, B, C2) || !imp(rest, AB, C3)) return false;
            return C2 == C && C3 == C && is_kind(AB, K::Or) && AB.left() == A && AB.right() == B;
        }
        case Schema::Q1:
            // forall x. A -> A[t/x]
            return imp(f, a, b) && is_kind(a, K::Forall) && is_substitution_instance(a.sub(), a.var(), b);
        case Schema::Q2:
            // A[t/x] -> exists x. A
            return imp(f, a, b) && is_kind(b, K::Exists) && is_substitution_instance(b.sub(), b.var(), a);
        case Schema::Q3:
            // forall x. (A -> B) -> (A -> forall x. B), x not free in A
            if (!imp(f, a, b) || !is_kind(a, K::Forall) || !imp(a.sub(), c, d) || !imp(b, e, g)) return false;
            return e == c && is_kind(g, K::Forall) && g.var() == a.var() && g.sub() == d && !fol::occurs_free(a.var(), c);
        case Schema::Q4:
            // forall x. (A -> B) -> (exists x. A -> B), x not free in B
            if (!imp(f, a, b) || !is_kind(a, K::Forall) || !imp(a.sub(), c, d) || !imp(b, e, g)) return false;
            return is_kind(e, K::Exists) && e.var() == a.var() && e.sub() == c && g == d && !fol::occurs_free(a.var(), d);
        case Schema::E1:
            return eq_atom(f, s1, t1) && s1 == t1;
        case Schema::E2:
            // s = t -> (s = u -> t = u)
            if (!imp(f, a, b) || !eq_atom(a, s1, t1) || !imp(b, c, d) || !eq_atom(c, s2, t2)) return false;
            return s2 == s1 && is_kind(d, K::Eq) && d.lhs_term() == t1 && d.rhs_term() == t2;
        case Schema::E3:
            if (!imp(f, a, b) || !eq_atom(a, s1, t1) || !eq_atom(b, s2, t2)) return false;
            return s2 == Term::succ(s1) && t2 == Term::succ(t1);
        case Schema::E4:
        case Schema::E5:
        case Schema::E6:
        case Schema::E7: {
            if (!imp(f, a, b) || !eq_atom(a, s1, t1) || !eq_atom(b, s2, t2)) return false;
            Term::Kind op = (s == Schema::E4 || s == Schema::E5) ? Term::Kind::Plus : Term::Kind::Times;
            if (s2.kind() != op || t2.kind() != op) return false;
            if (s == Schema::E4 || s == Schema::E6) {
                return s2.lhs() == s1 && t2.lhs() == t1 && s2.rhs() == t2.rhs();
            }
            return s2.rhs() == s1 && t2.rhs() == t1 && s2.lhs() == t2.lhs();
        }
        case Schema::E8:
        case Schema::E9:
            // s = t -> (s > u -> t > u)   /   s = t -> (u > s -> u > t)
            if (!imp(f, a, b) || !eq_atom(a, s1, t1) || !imp(b, c, d)) return false;
            if (!is_kind(c, K::Gt) || !is_kind(d, K::Gt)) return false;
            if (s == Schema::E8) return c.lhs_term() == s1 && d.lhs_term() == t1 && c.rhs_term() == d.rhs_term();
            return c.rhs_term() == s1 && d.rhs_term() == t1 && c.lhs_term() == d.lhs_term();
    }
    return false;
}

bool is_induction_instance(const Formula& f) {
    std::vector<std::string> ys;
    Formula cur = f;
    while (true) {
        Formula a, b;
        if (imp(cur, a, b) && is_kind(b, K::Forall)) {
            try {
                if (fol::induction_instance(b.sub(), b.var(), ys) == f) return true;
            } catch (const std::invalid_argument&) {
            }
        }
        if (!is_kind(cur, K::Forall)) return false;
        ys.push_back(cur.var());
        cur = cur.sub();
    }
}

bool is_true_closed_literal(const Formula& f) {
    if (!f.is_literal() || !fol::is_sentence(f)) return false;
    try {
        return fol::eval_atomic(f);
    } catch (const std::overflow_error&) {
        return false;
    }
}

}  // namespace

std::string_view to_string(Schema s) { return kSchemaNames[static_cast<std::size_t>(s)]; }

std::optional<Schema> parse_schema(std::string_view name) {
    for (std::size_t i = 0; i < kSchemaCount; ++i) {
        if (name == kSchemaNames[i]) return static_cast<Schema>(i);
    }
    return std::nullopt;
}

const std::vector<Schema>& all_schemas() {
    static const std::vector<Schema> all = [] {
        std::vector<Schema> v;
        for (std::size_t i = 0; i < kSchemaCount; ++i) v.push_back(static_cast<Schema>(i));
        return v;
    }();
    return all;
}

bool is_instance(Schema s, const Formula& f) { return match_schema(s, f); }

std::string to_string(const Justification& j) {
    switch (j.kind) {
        case Justification::Kind::Axiom: return "axiom " + std::string(to_string(j.schema));
        case Justification::Kind::PA: return "pa " + std::to_string(j.a);
        case Justification::Kind::Extra: return "extra " + std::to_string(j.a);
        case Justification::Kind::Induction: return "induction";
        case Justification::Kind::Calc: return "calc";
        case Justification::Kind::MP: return "mp " + std::to_string(j.a) + " " + std::to_string(j.b);
        case Justification::Kind::Gen: return "gen " + std::to_string(j.a) + " " + j.var;
    }
    return "?";
}

namespace {

// Checks step k (0-based) against the steps before it.
std::optional<std::string> check_step(const std::vector<Step>& steps, std::size_t k, const CalculusProfile& profile) {
    const auto& pa = fol::pa_axioms();
    const std::size_t n = k + 1;
    const Formula& f = steps[k].formula;
    const Justification& j = steps[k].why;
    auto earlier = [&](std::size_t i) { return i >= 1 && i < n; };
    switch (j.kind) {
        case Justification::Kind::Axiom:
            if (!match_schema(j.schema, f)) return "not an instance of " + std::string(to_string(j.schema));
            break;
        case Justification::Kind::PA:
            if (j.a < 1 || j.a > pa.size()) return "no PA axiom " + std::to_string(j.a);
            if (!(pa[j.a - 1] == f)) return "formula differs from PA axiom " + std::to_string(j.a);
            break;
        case Justification::Kind::Extra:
            if (j.a < 1 || j.a > profile.extra_axioms.size()) return "no extra axiom " + std::to_string(j.a);
            if (!(profile.extra_axioms[j.a - 1] == f)) return "formula differs from extra axiom " + std::to_string(j.a);
            break;
        case Justification::Kind::Induction:
            if (!is_induction_instance(f)) return "not an induction instance";
            break;
        case Justification::Kind::Calc:
            if (!is_true_closed_literal(f)) return "not a true closed literal";
            break;
        case Justification::Kind::MP: {
            if (!earlier(j.a) || !earlier(j.b)) return "modus ponens cites a step that does not precede it";
            const Formula& major = steps[j.b - 1].formula;
            Formula ante, cons;
            if (!imp(major, ante, cons)) return "step " + std::to_string(j.b) + " is not an implication";
            if (!(ante == steps[j.a - 1].formula)) {
                return "antecedent of step " + std::to_string(j.b) + " is not step " + std::to_string(j.a);
            }
            if (!(cons == f)) return "consequent of step " + std::to_string(j.b) + " is not this formula";
            break;
        }
        case Justification::Kind::Gen:
            if (!earlier(j.a)) return "generalization cites a step that does not precede it";
            if (!fol::valid_variable_name(j.var)) return "invalid variable '" + j.var + "'";
            if (!is_kind(f, K::Forall) || f.var() != j.var || !(f.sub() == steps[j.a - 1].formula)) {
                return "not the generalization of step " + std::to_string(j.a) + " over " + j.var;
            }
            break;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CheckError> check_proof(const Proof& p, const CalculusProfile& profile) {
    if (p.steps.empty()) return CheckError{0, "empty proof"};
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        if (auto reason = check_step(p.steps, k, profile)) return CheckError{k + 1, std::move(*reason)};
    }
    return std::nullopt;
}

namespace {

bool opens_at_end(const Formula& f) {
    if (f.kind() == K::Forall || f.kind() == K::Exists) return true;
    return f.kind() == K::Not && opens_at_end(f.sub());
}

class ProofCounter {
public:
    ProofCounter(std::size_t max_length, const std::vector<std::string>& vars, const CalculusProfile& profile)
        : limit_(max_length), vars_(vars), profile_(profile) {
        for (std::size_t s = 0; s < limit_; ++s) grow();
    }

    std::size_t count() { return extend(0); }

private:
    // Proofs that extend the current steps, whose symbols so far are `used`.
    std::size_t extend(std::size_t used) {
        std::size_t total = 0;
        auto try_step = [&](const Formula& f, const Justification& j) {
            if (used + f.size() >= limit_) return;
            steps_.push_back({f, j});
            if (!check_step(steps_, steps_.size() - 1, profile_)) total += 1 + extend(used + f.size());
            steps_.pop_back();
        };
        const std::size_t n = steps_.size();
        for (std::size_t s = 1; used + s < limit_; ++s) {
            for (const auto& f : formulas_[s]) {
                for (Schema sc : all_schemas()) try_step(f, Justification::axiom(sc));
                for (std::size_t k = 1; k <= fol::pa_axioms().size(); ++k) try_step(f, Justification::pa(k));
                for (std::size_t k = 1; k <= profile_.extra_axioms.size(); ++k) try_step(f, Justification::extra(k));
                try_step(f, Justification::induction());
                try_step(f, Justification::calc());
            }
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                Formula a, b;
                if (imp(steps_[j - 1].formula, a, b)) try_step(b, Justification::mp(i, j));
            }
            for (const auto& v : vars_) try_step(Formula::forall(v, steps_[i - 1].formula), Justification::gen(i, v));
        }
        return total;
    }

    void grow() {
        const std::size_t s = terms_.size();
        std::vector<Term> ts;
        if (s == 1) {
            ts.push_back(Term::zero());
            for (const auto& v : vars_) ts.push_back(Term::var(v));
        }
        if (s >= 2) {
            for (const auto& t : terms_[s - 1]) ts.push_back(Term::succ(t));
        }
        for (std::size_t l = 1; l + 4 <= s; ++l) {
            for (const auto& a : terms_[l]) {
                for (const auto& b : terms_[s - 3 - l]) {
                    ts.push_back(Term::plus(a, b));
                    ts.push_back(Term::times(a, b));
                }
            }
        }
        terms_.push_back(std::move(ts));

        std::vector<Formula> fs;
        for (std::size_t l = 1; l + 4 <= s; ++l) {
            for (const auto& a : terms_[l]) {
                for (const auto& b : terms_[s - 3 - l]) {
                    fs.push_back(Formula::eq(a, b));
                    fs.push_back(Formula::gt(a, b));
                }
            }
        }
        if (s >= 1) {
            for (const auto& f : formulas_[s - 1]) fs.push_back(Formula::negation(f));
        }
        if (s >= 3) {
            for (const auto& f : formulas_[s - 3]) {
                for (const auto& v : vars_) {
                    fs.push_back(Formula::forall(v, f));
                    fs.push_back(Formula::exists(v, f));
                }
            }
        }
        for (std::size_t l = 1; l + 4 < s; ++l) {
            for (const auto& a : formulas_[l]) {
                std::size_t wrap = opens_at_end(a) ? 2 : 0;
                if (l + wrap + 4 > s) continue;
                for (const auto& b : formulas_[s - 3 - l - wrap]) {
                    fs.push_back(Formula::disjunction(a, b));
                    fs.push_back(Formula::conjunction(a, b));
                }
            }
        }
        formulas_.push_back(std::move(fs));
    }

    std::size_t limit_;
    std::vector<std::string> vars_;
    const CalculusProfile& profile_;
    std::vector<std::vector<Term>> terms_{{}};
    std::vector<std::vector<Formula>> formulas_{{}};
    std::vector<Step> steps_;
};

}  // namespace

std::size_t count_proofs(std::size_t max_length, const std::vector<std::string>& variables,
                         const CalculusProfile& profile) {
    return ProofCounter(max_length, variables, profile).count();
}

std::size_t proof_length(const Proof& p, LengthMetric metric) {
    if (metric == LengthMetric::Steps) return p.steps.size();
    std::size_t n = 0;
    for (const auto& s : p.steps) n += s.formula.size();
    return n;
}

bool is_contradiction(const Formula& f) {
    return f.kind() == K::And && f.right().kind() == K::Not && f.right().sub() == f.left();
}

Proof explode(const Proof& p, const Formula& target, const CalculusProfile& profile) {
    if (auto err = check_proof(p, profile)) {
        throw std::invalid_argument("explode: input proof fails at step " + std::to_string(err->step) + ": " + err->reason);
    }
    const Formula c = p.conclusion();
    if (!is_contradiction(c)) throw std::invalid_argument("explode: conclusion is not a contradiction: " + print(c));
    if (target == c) return p;

    const Formula P = c.left();
    const Formula notP = c.right();
    Proof out = p;
    const std::size_t n = p.steps.size();
    auto add = [&](Formula f, Justification j) { out.steps.push_back({std::move(f), std::move(j)}); };
    add(Formula::implies(c, P), Justification::axiom(Schema::AndL));                                // n+1
    add(P, Justification::mp(n, n + 1));                                                               // n+2
    add(Formula::implies(c, notP), Justification::axiom(Schema::AndR));                             // n+3
    add(notP, Justification::mp(n, n + 3));                                                            // n+4
    add(Formula::implies(notP, Formula::implies(P, target)), Justification::axiom(Schema::ExFalso));  // n+5
    add(Formula::implies(P, target), Justification::mp(n + 4, n + 5));                                // n+6
    add(target, Justification::mp(n + 2, n + 6));                                                      // n+7
    return out;
}

std::string print_proof(const Proof& p) {
    std::string out;
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        out += std::to_string(k + 1) + ". " + print(p.steps[k].formula) + " ; " + to_string(p.steps[k].why) + "\n";
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<std::size_t> parse_index(std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

Justification parse_justification(std::string_view text, std::size_t line) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    if (words.empty()) throw ProofFormatError("missing justification", line);
    const std::string& tag = words[0];
    auto want = [&](std::size_t n) {
        if (words.size() != n + 1) {
            throw ProofFormatError("'" + tag + "' takes " + std::to_string(n) + " argument(s)", line);
        }
    };
    auto index = [&](std::size_t i) {
        auto v = parse_index(words[i]);
        if (!v) throw ProofFormatError("expected a step or axiom number, got '" + words[i] + "'", line);
        return *v;
    };
    if (tag == "axiom") {
        want(1);
        auto s = parse_schema(words[1]);
        if (!s) throw ProofFormatError("unknown axiom schema '" + words[1] + "'", line);
        return Justification::axiom(*s);
    }
    if (tag == "pa") { want(1); return Justification::pa(index(1)); }
    if (tag == "extra") { want(1); return Justification::extra(index(1)); }
    if (tag == "induction") { want(0); return Justification::induction(); }
    if (tag == "calc") { want(0); return Justification::calc(); }
    if (tag == "mp") { want(2); return Justification::mp(index(1), index(2)); }
    if (tag == "gen") {
        want(2);
        if (!fol::valid_variable_name(words[2])) throw ProofFormatError("invalid variable '" + words[2] + "'", line);
        return Justification::gen(index(1), words[2]);
    }
    throw ProofFormatError("unknown justification '" + tag + "'", line);
}

}  // namespace

Proof parse_proof(std::string_view text) {
    Proof p;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;

        std::size_t dot = line.find('.');
        if (dot == std::string_view::npos) throw ProofFormatError("expected '<n>. <formula> ; <justification>'", line_no);
        auto n = parse_index(trim(line.substr(0, dot)));
        if (!n) throw ProofFormatError("bad step number", line_no);
        if (*n != p.steps.size() + 1) {
            throw ProofFormatError("step number " + std::to_string(*n) + " out of sequence", line_no);
        }
        std::string_view rest = line.substr(dot + 1);
        std::size_t semi = rest.find(';');
        if (semi == std::string_view::npos) throw ProofFormatError("missing ';' before the justification", line_no);
        Formula f;
        try {
            f = fol::parse_formula(trim(rest.substr(0, semi)));
        } catch (const fol::SyntaxError& e) {
            throw ProofFormatError(e.what(), line_no);
        }
        p.steps.push_back({std::move(f), parse_justification(rest.substr(semi + 1), line_no)});
    }
    return p;
}

}  // namespace gentzen::proof
