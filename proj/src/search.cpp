// Backward search for contradiction proofs.
//
// Proofs are built goal-first over formula patterns with metavariables.  A
// goal is closed by an axiom (unification with a schema pattern), by reuse
// of an existing step, by numerical calculation, by generalization, or by
// modus ponens with a fresh minor premise.  Every open pattern has a size
// lower bound (5 per formula metavariable, 1 per term metavariable), so the
// search is finite for a length bound.  Substitution into an unbound
// metavariable is kept symbolic until the metavariable is bound.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "gentzen/arith.hpp"
#include "gentzen/proof.hpp"

namespace gentzen::proof {

namespace {

using fol::Term;
using Id = std::int32_t;
constexpr Id kNil = -1;

constexpr std::size_t kSymbolsCeiling = 180;
constexpr std::size_t kStepsCeiling = 11;
// The step metric leaves formula sizes open; searches under it also stop at
// this many symbols.
constexpr std::size_t kStepsSymbolCap = 400;
// Largest closed term tried for a metavariable of a calculation step.
constexpr std::size_t kCalcTermSize = 12;

enum class TK : std::uint8_t { Zero, Succ, Plus, Times, Var, Meta };
enum class FK : std::uint8_t { Eq, Gt, Not, Or, And, Forall, Exists, Meta };

struct TNode {
    TK k;
    Id a = kNil, b = kNil;
    int sym = -1;
    int meta = -1;
    Id sub = kNil;
};

struct FNode {
    FK k;
    Id a = kNil, b = kNil;
    int sym = -1;
    int meta = -1;
    Id sub = kNil;
};

// One cell of a substitution list.  The head is the substitution applied
// last.
struct SNode {
    int var;
    Id term;
    Id next;
};

enum class Occurs { None, Flex, Rigid };

struct Postponed {
    bool formula;
    Id p, q;
};

class Store {
public:
    struct Mark {
        std::size_t tn, fn, sn, tb, fb, trail, post, active;
    };

    Store() { zero_ = mk_t({TK::Zero}); }

    Mark mark() const { return {tn_.size(), fn_.size(), sn_.size(), tbind_.size(), fbind_.size(), trail_.size(), post_.size(), active_}; }

    void undo(const Mark& m) {
        while (trail_.size() > m.trail) {
            auto [formula, meta] = trail_.back();
            trail_.pop_back();
            if (formula) {
                fbind_[meta] = kNil;
            } else {
                tbind_[meta] = kNil;
            }
        }
        tn_.resize(m.tn);
        fn_.resize(m.fn);
        sn_.resize(m.sn);
        tbind_.resize(m.tb);
        fbind_.resize(m.fb);
        tplain_.resize(m.tb);
        fplain_.resize(m.fb);
        post_.resize(m.post);
        active_ = m.active;
    }

    int intern(const std::string& name) {
        auto [it, fresh] = sym_ids_.emplace(name, static_cast<int>(names_.size()));
        if (fresh) names_.push_back(name);
        return it->second;
    }
    const std::string& name(int sym) const { return names_[sym]; }
    std::size_t symbol_count() const { return names_.size(); }

    const TNode& t(Id i) const { return tn_[i]; }
    const FNode& f(Id i) const { return fn_[i]; }

    Id zero() const { return zero_; }
    Id succ(Id a) { return mk_t({TK::Succ, a}); }
    Id plus(Id a, Id b) { return mk_t({TK::Plus, a, b}); }
    Id times(Id a, Id b) { return mk_t({TK::Times, a, b}); }
    Id var(int sym) { return mk_t({TK::Var, kNil, kNil, sym}); }
    Id tmeta() {
        tbind_.push_back(kNil);
        tplain_.push_back(mk_t({TK::Meta, kNil, kNil, -1, static_cast<int>(tbind_.size() - 1)}));
        return tplain_.back();
    }

    Id eq(Id a, Id b) { return mk_f({FK::Eq, a, b}); }
    Id gt(Id a, Id b) { return mk_f({FK::Gt, a, b}); }
    Id neg(Id a) { return mk_f({FK::Not, a}); }
    Id disj(Id a, Id b) { return mk_f({FK::Or, a, b}); }
    Id conj(Id a, Id b) { return mk_f({FK::And, a, b}); }
    Id imp(Id a, Id b) { return disj(neg(a), b); }
    Id all(int sym, Id a) { return mk_f({FK::Forall, a, kNil, sym}); }
    Id ex(int sym, Id a) { return mk_f({FK::Exists, a, kNil, sym}); }
    Id fmeta() {
        fbind_.push_back(kNil);
        fplain_.push_back(mk_f({FK::Meta, kNil, kNil, -1, static_cast<int>(fbind_.size() - 1)}));
        return fplain_.back();
    }

    // f[by/var], kept symbolic on unbound metavariables.
    Id subst_f(Id f, int var, Id by) {
        f = resolve_f(f);
        const FNode n = fn_[f];
        switch (n.k) {
            case FK::Eq:
            case FK::Gt: {
                Id a = subst_t(n.a, var, by), b = subst_t(n.b, var, by);
                if (a == n.a && b == n.b) return f;
                return mk_f({n.k, a, b});
            }
            case FK::Not: {
                Id a = subst_f(n.a, var, by);
                return a == n.a ? f : neg(a);
            }
            case FK::Or:
            case FK::And: {
                Id a = subst_f(n.a, var, by), b = subst_f(n.b, var, by);
                if (a == n.a && b == n.b) return f;
                return mk_f({n.k, a, b});
            }
            case FK::Forall:
            case FK::Exists: {
                if (n.sym == var) return f;
                Id a = subst_f(n.a, var, by);
                return a == n.a ? f : mk_f({n.k, a, kNil, n.sym});
            }
            case FK::Meta:
                return mk_f({FK::Meta, kNil, kNil, -1, n.meta, cons(var, by, n.sub)});
        }
        return f;
    }

    Id subst_t(Id t, int var, Id by) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Zero: return t;
            case TK::Var: return n.sym == var ? by : t;
            case TK::Succ: {
                Id a = subst_t(n.a, var, by);
                return a == n.a ? t : succ(a);
            }
            case TK::Plus:
            case TK::Times: {
                Id a = subst_t(n.a, var, by), b = subst_t(n.b, var, by);
                if (a == n.a && b == n.b) return t;
                return mk_t({n.k, a, b});
            }
            case TK::Meta:
                return mk_t({TK::Meta, kNil, kNil, -1, n.meta, cons(var, by, n.sub)});
        }
        return t;
    }

    Id resolve_f(Id f) {
        while (fn_[f].k == FK::Meta && fbind_[fn_[f].meta] != kNil) {
            const FNode n = fn_[f];
            f = apply_list_f(fbind_[n.meta], n.sub);
        }
        return f;
    }

    Id resolve_t(Id t) {
        while (tn_[t].k == TK::Meta && tbind_[tn_[t].meta] != kNil) {
            const TNode n = tn_[t];
            t = apply_list_t(tbind_[n.meta], n.sub);
        }
        return t;
    }

    bool unify_f(Id p, Id q) {
        p = resolve_f(p);
        q = resolve_f(q);
        if (p == q) return true;
        const FNode a = fn_[p];
        const FNode b = fn_[q];
        if (a.k == FK::Meta && b.k == FK::Meta && a.meta == b.meta && a.sub == b.sub) return true;
        if (a.k == FK::Meta && a.sub == kNil) return bind_f(a.meta, q);
        if (b.k == FK::Meta && b.sub == kNil) return bind_f(b.meta, p);
        if (a.k == FK::Meta || b.k == FK::Meta) {
            if (a.k == FK::Meta && b.k == FK::Meta) {
                post_.push_back({true, p, q});
                return true;
            }
            // Substitution preserves the connective structure, so the
            // metavariable takes the rigid side's top constructor.
            const FNode& flex = a.k == FK::Meta ? a : b;
            const FNode& rigid = a.k == FK::Meta ? b : a;
            // It cannot also occur inside: substitution keeps the number of
            // connectives.
            if (occurs_in_f(flex.meta, a.k == FK::Meta ? q : p, false) != Occurs::None) return false;
            if (!bind_f(flex.meta, skeleton(rigid))) return false;
            return unify_f(p, q);
        }
        if (a.k != b.k) return false;
        switch (a.k) {
            case FK::Eq:
            case FK::Gt: return unify_t(a.a, b.a) && unify_t(a.b, b.b);
            case FK::Not: return unify_f(a.a, b.a);
            case FK::Or:
            case FK::And: return unify_f(a.a, b.a) && unify_f(a.b, b.b);
            case FK::Forall:
            case FK::Exists: return a.sym == b.sym && unify_f(a.a, b.a);
            case FK::Meta: break;
        }
        return false;
    }

    bool unify_t(Id p, Id q) {
        p = resolve_t(p);
        q = resolve_t(q);
        if (p == q) return true;
        const TNode a = tn_[p];
        const TNode b = tn_[q];
        if (a.k == TK::Meta && b.k == TK::Meta && a.meta == b.meta && a.sub == b.sub) return true;
        if (a.k == TK::Meta && a.sub == kNil) return bind_t(a.meta, q);
        if (b.k == TK::Meta && b.sub == kNil) return bind_t(b.meta, p);
        if (a.k == TK::Meta || b.k == TK::Meta) {
            post_.push_back({false, p, q});
            return true;
        }
        if (a.k != b.k) return false;
        switch (a.k) {
            case TK::Zero: return true;
            case TK::Var: return a.sym == b.sym;
            case TK::Succ: return unify_t(a.a, b.a);
            case TK::Plus:
            case TK::Times: return unify_t(a.a, b.a) && unify_t(a.b, b.b);
            case TK::Meta: break;
        }
        return false;
    }

    bool bind_f(int meta, Id value) {
        Occurs o = occurs_in_f(meta, value, true);
        if (o == Occurs::Rigid) return false;
        if (o == Occurs::Flex) {
            post_.push_back({true, fplain_[meta], value});
            return true;
        }
        fbind_[meta] = value;
        trail_.push_back({true, meta});
        return true;
    }

    bool bind_t(int meta, Id value) {
        Occurs o = occurs_in_t(meta, value, true);
        if (o == Occurs::Rigid) return false;
        if (o == Occurs::Flex) {
            post_.push_back({false, tplain_[meta], value});
            return true;
        }
        tbind_[meta] = value;
        trail_.push_back({false, meta});
        return true;
    }

    enum class Pass { Clash, Settled, Progress };

    // Re-examines the postponed equations once.
    Pass propagate_once() {
        if (active_ == post_.size()) return Pass::Settled;
        std::size_t end = post_.size();
        std::size_t before = trail_.size();
        std::size_t begin = active_;
        active_ = end;
        for (std::size_t i = begin; i < end; ++i) {
            Postponed e = post_[i];
            if (!(e.formula ? unify_f(e.p, e.q) : unify_t(e.p, e.q))) return Pass::Clash;
        }
        if (trail_.size() == before && post_.size() - end == end - begin) return Pass::Settled;
        return Pass::Progress;
    }

    const std::vector<Postponed>& postponed() const { return post_; }
    std::size_t active() const { return active_; }

    std::size_t size_f(Id f) {
        f = resolve_f(f);
        const FNode n = fn_[f];
        switch (n.k) {
            case FK::Eq:
            case FK::Gt: return 3 + size_t_(n.a) + size_t_(n.b);
            case FK::Not: return 1 + size_f(n.a);
            case FK::Or:
            case FK::And: return 3 + size_f(n.a) + size_f(n.b) + (ends_open(n.a) ? 2 : 0);
            case FK::Forall:
            case FK::Exists: return 3 + size_f(n.a);
            case FK::Meta: return 5;
        }
        return 0;
    }

    std::size_t size_t_(Id t) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Zero:
            case TK::Var:
            case TK::Meta: return 1;
            case TK::Succ: return 1 + size_t_(n.a);
            case TK::Plus:
            case TK::Times: return 3 + size_t_(n.a) + size_t_(n.b);
        }
        return 0;
    }

    bool ends_open(Id f) {
        f = resolve_f(f);
        const FNode& n = fn_[f];
        if (n.k == FK::Forall || n.k == FK::Exists) return true;
        if (n.k == FK::Not) return ends_open(n.a);
        return false;
    }

    // Value of a closed ground term; nullopt when it still has metavariables
    // or variables, or overflows.
    std::optional<fol::Natural> value(Id t) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Zero: return 0;
            case TK::Var:
            case TK::Meta: return std::nullopt;
            case TK::Succ: {
                auto a = value(n.a);
                if (!a || *a == UINT64_MAX) return std::nullopt;
                return *a + 1;
            }
            case TK::Plus:
            case TK::Times: {
                auto a = value(n.a);
                auto b = value(n.b);
                if (!a || !b) return std::nullopt;
                fol::Natural r;
                bool over = n.k == TK::Plus ? __builtin_add_overflow(*a, *b, &r) : __builtin_mul_overflow(*a, *b, &r);
                if (over) return std::nullopt;
                return r;
            }
        }
        return std::nullopt;
    }

    void collect_metas(Id f, std::set<int>& fm, std::set<int>& tm) {
        f = resolve_f(f);
        const FNode n = fn_[f];
        switch (n.k) {
            case FK::Eq:
            case FK::Gt:
                collect_tmetas(n.a, tm);
                collect_tmetas(n.b, tm);
                return;
            case FK::Not: collect_metas(n.a, fm, tm); return;
            case FK::Or:
            case FK::And:
                collect_metas(n.a, fm, tm);
                collect_metas(n.b, fm, tm);
                return;
            case FK::Forall:
            case FK::Exists: collect_metas(n.a, fm, tm); return;
            case FK::Meta:
                fm.insert(n.meta);
                for (Id s = n.sub; s != kNil; s = sn_[s].next) collect_tmetas(sn_[s].term, tm);
                return;
        }
    }

    void collect_tmetas(Id t, std::set<int>& tm) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Succ: collect_tmetas(n.a, tm); return;
            case TK::Plus:
            case TK::Times:
                collect_tmetas(n.a, tm);
                collect_tmetas(n.b, tm);
                return;
            case TK::Meta:
                tm.insert(n.meta);
                for (Id s = n.sub; s != kNil; s = sn_[s].next) collect_tmetas(sn_[s].term, tm);
                return;
            default: return;
        }
    }

    void collect_syms(Id f, std::set<int>& out) {
        f = resolve_f(f);
        const FNode n = fn_[f];
        switch (n.k) {
            case FK::Eq:
            case FK::Gt:
                collect_tsyms(n.a, out);
                collect_tsyms(n.b, out);
                return;
            case FK::Not: collect_syms(n.a, out); return;
            case FK::Or:
            case FK::And:
                collect_syms(n.a, out);
                collect_syms(n.b, out);
                return;
            case FK::Forall:
            case FK::Exists:
                out.insert(n.sym);
                collect_syms(n.a, out);
                return;
            case FK::Meta:
                for (Id s = n.sub; s != kNil; s = sn_[s].next) {
                    out.insert(sn_[s].var);
                    collect_tsyms(sn_[s].term, out);
                }
                return;
        }
    }

    void collect_tsyms(Id t, std::set<int>& out) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Var: out.insert(n.sym); return;
            case TK::Succ: collect_tsyms(n.a, out); return;
            case TK::Plus:
            case TK::Times:
                collect_tsyms(n.a, out);
                collect_tsyms(n.b, out);
                return;
            case TK::Meta:
                for (Id s = n.sub; s != kNil; s = sn_[s].next) {
                    out.insert(sn_[s].var);
                    collect_tsyms(sn_[s].term, out);
                }
                return;
            default: return;
        }
    }

    // Distinct variables substituted in a metavariable occurrence.
    std::vector<int> subst_vars(Id sub) const {
        std::vector<int> vars;
        for (Id s = sub; s != kNil; s = sn_[s].next) {
            if (std::find(vars.begin(), vars.end(), sn_[s].var) == vars.end()) vars.push_back(sn_[s].var);
        }
        return vars;
    }

    bool tmeta_bound(int m) const { return tbind_[m] != kNil; }
    bool fmeta_bound(int m) const { return fbind_[m] != kNil; }
    std::size_t tmeta_count() const { return tbind_.size(); }
    std::size_t fmeta_count() const { return fbind_.size(); }
    // The occurrence of a metavariable without substitutions.
    Id plain_t(int m) const { return tplain_[m]; }
    Id plain_f(int m) const { return fplain_[m]; }

    Id from_term(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Zero: return zero_;
            case Term::Kind::Var: return var(intern(t.name()));
            case Term::Kind::Succ: return succ(from_term(t.arg()));
            case Term::Kind::Plus: return plus(from_term(t.lhs()), from_term(t.rhs()));
            case Term::Kind::Times: return times(from_term(t.lhs()), from_term(t.rhs()));
        }
        return zero_;
    }

    Id from_formula(const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::Eq: return eq(from_term(f.lhs_term()), from_term(f.rhs_term()));
            case Formula::Kind::Gt: return gt(from_term(f.lhs_term()), from_term(f.rhs_term()));
            case Formula::Kind::Not: return neg(from_formula(f.sub()));
            case Formula::Kind::Or: return disj(from_formula(f.left()), from_formula(f.right()));
            case Formula::Kind::And: return conj(from_formula(f.left()), from_formula(f.right()));
            case Formula::Kind::Forall: return all(intern(f.var()), from_formula(f.sub()));
            case Formula::Kind::Exists: return ex(intern(f.var()), from_formula(f.sub()));
        }
        return kNil;
    }

    // Throws std::logic_error on a remaining metavariable.
    Term to_term(Id t) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Zero: return Term::zero();
            case TK::Var: return Term::var(names_[n.sym]);
            case TK::Succ: return Term::succ(to_term(n.a));
            case TK::Plus: return Term::plus(to_term(n.a), to_term(n.b));
            case TK::Times: return Term::times(to_term(n.a), to_term(n.b));
            case TK::Meta: break;
        }
        throw std::logic_error("unresolved term metavariable");
    }

    Formula to_formula(Id f) {
        f = resolve_f(f);
        const FNode n = fn_[f];
        switch (n.k) {
            case FK::Eq: return Formula::eq(to_term(n.a), to_term(n.b));
            case FK::Gt: return Formula::gt(to_term(n.a), to_term(n.b));
            case FK::Not: return Formula::negation(to_formula(n.a));
            case FK::Or: return Formula::disjunction(to_formula(n.a), to_formula(n.b));
            case FK::And: return Formula::conjunction(to_formula(n.a), to_formula(n.b));
            case FK::Forall: return Formula::forall(names_[n.sym], to_formula(n.a));
            case FK::Exists: return Formula::exists(names_[n.sym], to_formula(n.a));
            case FK::Meta: break;
        }
        throw std::logic_error("unresolved formula metavariable");
    }

private:
    Id mk_t(TNode n) {
        tn_.push_back(n);
        return static_cast<Id>(tn_.size() - 1);
    }
    Id mk_f(FNode n) {
        fn_.push_back(n);
        return static_cast<Id>(fn_.size() - 1);
    }
    Id cons(int var, Id term, Id next) {
        sn_.push_back({var, term, next});
        return static_cast<Id>(sn_.size() - 1);
    }

    Id apply_list_f(Id f, Id sub) {
        if (sub == kNil) return f;
        const SNode s = sn_[sub];
        return subst_f(apply_list_f(f, s.next), s.var, s.term);
    }
    Id apply_list_t(Id t, Id sub) {
        if (sub == kNil) return t;
        const SNode s = sn_[sub];
        return subst_t(apply_list_t(t, s.next), s.var, s.term);
    }

    Id skeleton(const FNode& n) {
        switch (n.k) {
            case FK::Eq: return eq(tmeta(), tmeta());
            case FK::Gt: return gt(tmeta(), tmeta());
            case FK::Not: return neg(fmeta());
            case FK::Or: return disj(fmeta(), fmeta());
            case FK::And: return conj(fmeta(), fmeta());
            case FK::Forall: return all(n.sym, fmeta());
            case FK::Exists: return ex(n.sym, fmeta());
            case FK::Meta: break;
        }
        return fmeta();
    }

    Occurs occurs_in_f(int meta, Id f, bool top) {
        f = resolve_f(f);
        const FNode n = fn_[f];
        switch (n.k) {
            case FK::Eq:
            case FK::Gt: return Occurs::None;  // term positions never hold formula metavariables
            case FK::Not: return occurs_in_f(meta, n.a, false);
            case FK::Or:
            case FK::And: {
                Occurs a = occurs_in_f(meta, n.a, false);
                Occurs b = occurs_in_f(meta, n.b, false);
                return std::max(a, b);
            }
            case FK::Forall:
            case FK::Exists: return occurs_in_f(meta, n.a, false);
            case FK::Meta:
                if (n.meta != meta) return Occurs::None;
                return top ? Occurs::Flex : Occurs::Rigid;
        }
        return Occurs::None;
    }

    Occurs occurs_in_t(int meta, Id t, bool top) {
        t = resolve_t(t);
        const TNode n = tn_[t];
        switch (n.k) {
            case TK::Zero:
            case TK::Var: return Occurs::None;
            case TK::Succ: return occurs_in_t(meta, n.a, false);
            case TK::Plus:
            case TK::Times: return std::max(occurs_in_t(meta, n.a, false), occurs_in_t(meta, n.b, false));
            case TK::Meta: {
                Occurs o = Occurs::None;
                if (n.meta == meta) o = top ? Occurs::Flex : Occurs::Rigid;
                for (Id s = n.sub; s != kNil; s = sn_[s].next) {
                    if (occurs_in_t(meta, sn_[s].term, false) != Occurs::None) o = std::max(o, Occurs::Flex);
                }
                return o;
            }
        }
        return Occurs::None;
    }

    std::vector<TNode> tn_;
    std::vector<FNode> fn_;
    std::vector<SNode> sn_;
    std::vector<Id> tbind_;
    std::vector<Id> fbind_;
    std::vector<Id> tplain_;
    std::vector<Id> fplain_;
    std::vector<std::pair<bool, int>> trail_;
    std::vector<Postponed> post_;
    std::size_t active_ = 0;
    Id zero_ = kNil;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> sym_ids_;
};

enum class Rule : std::uint8_t { Open, Merged, Axiom, PA, Extra, Induction, Calc, MP, Gen };

struct PNode {
    Id f;
    Rule rule = Rule::Open;
    Schema schema = Schema::L1;
    int a = -1, b = -1;  // premises; Merged: the node reused
    int sym = -1;
    std::size_t k = 0;
};

class Searcher {
public:
    Searcher(const CalculusProfile& profile, std::size_t limit, bool minimize)
        : profile_(profile), limit_(limit), minimize_(minimize) {
        for (const char* v : {"x", "y", "z"}) fixed_syms_.insert(store_.intern(v));
        for (const auto& ax : fol::pa_axioms()) pa_.push_back(store_.from_formula(ax));
        for (const auto& ax : profile.extra_axioms) extra_.push_back(store_.from_formula(ax));
        for (Id a : extra_) store_.collect_syms(a, fixed_syms_);
        zero_eq_ = store_.eq(store_.zero(), store_.zero());
    }

    std::optional<Proof> run() {
        Id p = store_.fmeta();
        Id root = store_.conj(p, store_.neg(p));
        nodes_.push_back({root});
        dfs();
        return best_;
    }

    std::size_t expanded() const { return expanded_; }

private:
    struct Mark {
        Store::Mark store;
        std::size_t nodes;
        std::size_t saved;
    };

    Mark mark() const { return {store_.mark(), nodes_.size(), saved_.size()}; }

    void undo(const Mark& m) {
        while (saved_.size() > m.saved) {
            nodes_[saved_.back().first] = saved_.back().second;
            saved_.pop_back();
        }
        nodes_.resize(m.nodes);
        store_.undo(m.store);
    }

    void set_node(int i, const PNode& n) {
        saved_.push_back({i, nodes_[i]});
        nodes_[i] = n;
    }

    int add_node(Id f) {
        nodes_.push_back({f});
        return static_cast<int>(nodes_.size() - 1);
    }

    // Runs `apply` under a mark and recurses; the state is restored unless
    // the search is finished.
    template <class F>
    bool attempt(F&& apply) {
        Mark m = mark();
        if (apply() && propagate() && dfs()) return true;
        undo(m);
        return false;
    }

    // A calculation step that is already ground must be a true closed
    // literal.
    bool calc_steps_plausible() {
        for (const auto& n : nodes_) {
            if (n.rule != Rule::Calc) continue;
            Id f = store_.resolve_f(n.f);
            bool negated = store_.f(f).k == FK::Not;
            if (negated) f = store_.resolve_f(store_.f(f).a);
            const FNode atom = store_.f(f);
            if (atom.k != FK::Eq && atom.k != FK::Gt) continue;
            auto a = store_.value(atom.a);
            auto b = store_.value(atom.b);
            if (!a || !b) continue;
            bool truth = atom.k == FK::Eq ? *a == *b : *a > *b;
            if (truth == negated) return false;
        }
        return true;
    }

    bool is_bare(const PNode& n) { return store_.f(store_.resolve_f(n.f)).k == FK::Meta; }

    int pick_goal() {
        int bare = -1;
        for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
            if (nodes_[i].rule != Rule::Open) continue;
            if (!is_bare(nodes_[i])) return i;
            if (bare < 0) bare = i;
        }
        return bare;
    }

    bool depends_on(int from, int target) {
        std::vector<int> stack{from};
        std::vector<bool> seen(nodes_.size(), false);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            if (i == target) return true;
            if (i < 0 || seen[i]) continue;
            seen[i] = true;
            const PNode& n = nodes_[i];
            if (n.rule == Rule::MP || n.rule == Rule::Merged || n.rule == Rule::Gen) {
                stack.push_back(n.a);
                if (n.rule == Rule::MP) stack.push_back(n.b);
            }
        }
        return false;
    }

    bool in_postponed(int fmeta) {
        const auto& post = store_.postponed();
        for (std::size_t i = store_.active(); i < post.size(); ++i) {
            if (!post[i].formula) continue;
            std::set<int> fm, tm;
            store_.collect_metas(post[i].p, fm, tm);
            store_.collect_metas(post[i].q, fm, tm);
            if (fm.count(fmeta)) return true;
        }
        return false;
    }

    std::vector<int> variable_candidates() {
        std::set<int> used = fixed_syms_;
        for (const auto& n : nodes_) store_.collect_syms(n.f, used);
        std::vector<int> out(used.begin(), used.end());
        static const char* const stems[] = {"u", "v", "w"};
        for (std::size_t i = 0;; ++i) {
            std::string name = stems[i % 3];
            if (i >= 3) name += std::to_string(i / 3);
            int s = store_.intern(name);
            if (!used.count(s)) {
                out.push_back(s);
                break;
            }
        }
        return out;
    }

    // Bindings can chain through substitutions without end; every round
    // that learns something is followed by a budget check, and growing
    // chains run into it.
    bool propagate() {
        while (true) {
            switch (store_.propagate_once()) {
                case Store::Pass::Clash: return false;
                case Store::Pass::Settled: return true;
                case Store::Pass::Progress:
                    if (over_budget()) return false;
                    break;
            }
        }
    }

    std::size_t symbols() {
        std::size_t total = 0;
        for (const auto& n : nodes_) {
            if (n.rule != Rule::Merged) total += store_.size_f(n.f);
        }
        return total;
    }

    std::size_t symbol_limit() const {
        return profile_.metric == LengthMetric::Steps ? kStepsSymbolCap : limit_;
    }

    bool over_budget() {
        if (profile_.metric == LengthMetric::Steps && nodes_in_use() >= limit_) return true;
        return symbols() >= symbol_limit();
    }

    std::size_t nodes_in_use() const {
        return static_cast<std::size_t>(
            std::count_if(nodes_.begin(), nodes_.end(), [](const PNode& n) { return n.rule != Rule::Merged; }));
    }

    bool dfs() {
        ++expanded_;
        if (over_budget()) return false;
        if (!calc_steps_plausible()) return false;
        int g = pick_goal();
        if (g < 0) return finish();

        const Id f = store_.resolve_f(nodes_[g].f);
        const FNode& top = store_.f(f);
        if (top.k == FK::Meta && !in_postponed(top.meta)) return close_bare(g);
        return close_goal(g);
    }

    bool merge_options(int g) {
        for (int h = 0; h < static_cast<int>(nodes_.size()); ++h) {
            const PNode& n = nodes_[h];
            if (h == g || n.rule == Rule::Open || n.rule == Rule::Merged) continue;
            if (depends_on(h, g)) continue;
            bool done = attempt([&] {
                if (!store_.unify_f(nodes_[g].f, nodes_[h].f)) return false;
                PNode m = nodes_[g];
                m.rule = Rule::Merged;
                m.a = h;
                set_node(g, m);
                return true;
            });
            if (done) return true;
        }
        return false;
    }

    bool justify(int g, Id pattern, Rule rule, Schema schema = Schema::L1, std::size_t k = 0) {
        return attempt([&] {
            if (!store_.unify_f(nodes_[g].f, pattern)) return false;
            PNode n = nodes_[g];
            n.rule = rule;
            n.schema = schema;
            n.k = k;
            set_node(g, n);
            return true;
        });
    }

    // A goal that is a lone metavariable occurring nowhere that still
    // constrains it: reuse an existing step, or prove 0 = 0.
    bool close_bare(int g) {
        if (merge_options(g)) return true;
        return justify(g, zero_eq_, Rule::Axiom, Schema::E1);
    }

    bool close_goal(int g) {
        if (merge_options(g)) return true;
        const Id f = store_.resolve_f(nodes_[g].f);
        const FK top = store_.f(f).k;

        if (calc_options(g, f)) return true;

        for (Schema s : all_schemas()) {
            if (!schema_fits(s, top)) continue;
            for (Id pattern : schema_patterns(s, f)) {
                if (justify(g, pattern, Rule::Axiom, s)) return true;
            }
        }
        for (std::size_t k = 0; k < pa_.size(); ++k) {
            if (justify(g, pa_[k], Rule::PA, Schema::L1, k + 1)) return true;
        }
        for (std::size_t k = 0; k < extra_.size(); ++k) {
            if (justify(g, extra_[k], Rule::Extra, Schema::L1, k + 1)) return true;
        }
        if ((top == FK::Forall || top == FK::Or || top == FK::Meta) && induction_options(g, f, {})) return true;

        if (top == FK::Forall) {
            const FNode q = store_.f(f);
            bool done = attempt([&] {
                int body = add_node(q.a);
                PNode n = nodes_[g];
                n.rule = Rule::Gen;
                n.a = body;
                n.sym = q.sym;
                set_node(g, n);
                return true;
            });
            if (done) return true;
        } else if (top == FK::Meta) {
            for (int v : variable_candidates()) {
                bool done = attempt([&] {
                    Id body = store_.fmeta();
                    if (!store_.unify_f(nodes_[g].f, store_.all(v, body))) return false;
                    int b = add_node(body);
                    PNode n = nodes_[g];
                    n.rule = Rule::Gen;
                    n.a = b;
                    n.sym = v;
                    set_node(g, n);
                    return true;
                });
                if (done) return true;
            }
        }

        return attempt([&] {
            Id minor = store_.fmeta();
            int i = add_node(minor);
            int j = add_node(store_.imp(minor, nodes_[g].f));
            PNode n = nodes_[g];
            n.rule = Rule::MP;
            n.a = i;
            n.b = j;
            set_node(g, n);
            return true;
        });
    }

    bool calc_options(int g, Id f) {
        const FNode n = store_.f(f);
        auto mark_calc = [&] {
            PNode p = nodes_[g];
            p.rule = Rule::Calc;
            set_node(g, p);
            return true;
        };
        auto atom_shapes = [&](Id target) {
            for (bool is_eq : {true, false}) {
                bool done = attempt([&] {
                    Id atom = is_eq ? store_.eq(store_.tmeta(), store_.tmeta()) : store_.gt(store_.tmeta(), store_.tmeta());
                    return store_.unify_f(target, atom) && mark_calc();
                });
                if (done) return true;
            }
            return false;
        };
        switch (n.k) {
            case FK::Eq:
            case FK::Gt: return attempt(mark_calc);
            case FK::Not: {
                Id inner = store_.resolve_f(n.a);
                FK k = store_.f(inner).k;
                if (k == FK::Eq || k == FK::Gt) return attempt(mark_calc);
                if (k == FK::Meta) return atom_shapes(inner);
                return false;
            }
            case FK::Meta: return atom_shapes(f) || atom_shapes_negated(g, f);
            default: return false;
        }
    }

    bool atom_shapes_negated(int g, Id f) {
        for (bool is_eq : {true, false}) {
            bool done = attempt([&] {
                Id atom = is_eq ? store_.eq(store_.tmeta(), store_.tmeta()) : store_.gt(store_.tmeta(), store_.tmeta());
                if (!store_.unify_f(f, store_.neg(atom))) return false;
                PNode p = nodes_[g];
                p.rule = Rule::Calc;
                set_node(g, p);
                return true;
            });
            if (done) return true;
        }
        return false;
    }

    static bool schema_fits(Schema s, FK top) {
        if (top == FK::Meta) return true;
        if (s == Schema::E1) return top == FK::Eq;
        return top == FK::Or;
    }

    // Follows `!a | b` through resolved patterns.
    bool split_imp(Id f, Id& a, Id& b) {
        f = store_.resolve_f(f);
        const FNode& n = store_.f(f);
        if (n.k != FK::Or) return false;
        Id l = store_.resolve_f(n.a);
        if (store_.f(l).k != FK::Not) return false;
        a = store_.f(l).a;
        b = n.b;
        return true;
    }

    int binder_of(Id f, FK kind) {
        f = store_.resolve_f(f);
        const FNode& n = store_.f(f);
        return n.k == kind ? n.sym : -1;
    }

    // The binder variable a quantifier schema must use, when the goal fixes
    // it.
    int schema_binder(Schema s, Id goal) {
        Id a, b, c, d;
        switch (s) {
            case Schema::Q1:
                if (split_imp(goal, a, b)) return binder_of(a, FK::Forall);
                return -1;
            case Schema::Q2:
                if (split_imp(goal, a, b)) return binder_of(b, FK::Exists);
                return -1;
            case Schema::Q3:
                if (!split_imp(goal, a, b)) return -1;
                if (int v = binder_of(a, FK::Forall); v >= 0) return v;
                if (split_imp(b, c, d)) return binder_of(d, FK::Forall);
                return -1;
            case Schema::Q4:
                if (!split_imp(goal, a, b)) return -1;
                if (int v = binder_of(a, FK::Forall); v >= 0) return v;
                if (split_imp(b, c, d)) return binder_of(c, FK::Exists);
                return -1;
            default: return -1;
        }
    }

    std::vector<Id> schema_patterns(Schema s, Id goal) {
        Store& S = store_;
        auto A = [&] { return S.fmeta(); };
        auto T = [&] { return S.tmeta(); };
        std::vector<Id> out;
        switch (s) {
            case Schema::L1: {
                Id a = A(), b = A();
                out.push_back(S.imp(a, S.imp(b, a)));
                break;
            }
            case Schema::L2: {
                Id a = A(), b = A(), c = A();
                out.push_back(S.imp(S.imp(a, S.imp(b, c)), S.imp(S.imp(a, b), S.imp(a, c))));
                break;
            }
            case Schema::L3: {
                Id a = A(), b = A();
                out.push_back(S.imp(S.imp(S.neg(a), S.neg(b)), S.imp(b, a)));
                break;
            }
            case Schema::DN: {
                Id a = A();
                out.push_back(S.imp(S.neg(S.neg(a)), a));
                break;
            }
            case Schema::ExFalso: {
                Id a = A(), b = A();
                out.push_back(S.imp(S.neg(a), S.imp(a, b)));
                break;
            }
            case Schema::AndL: {
                Id a = A(), b = A();
                out.push_back(S.imp(S.conj(a, b), a));
                break;
            }
            case Schema::AndR: {
                Id a = A(), b = A();
                out.push_back(S.imp(S.conj(a, b), b));
                break;
            }
            case Schema::AndI: {
                Id a = A(), b = A();
                out.push_back(S.imp(a, S.imp(b, S.conj(a, b))));
                break;
            }
            case Schema::OrL: {
                Id a = A(), b = A();
                out.push_back(S.imp(a, S.disj(a, b)));
                break;
            }
            case Schema::OrR: {
                Id a = A(), b = A();
                out.push_back(S.imp(b, S.disj(a, b)));
                break;
            }
            case Schema::OrE: {
                Id a = A(), b = A(), c = A();
                out.push_back(S.imp(S.imp(a, c), S.imp(S.imp(b, c), S.imp(S.disj(a, b), c))));
                break;
            }
            case Schema::Q1:
            case Schema::Q2:
            case Schema::Q3:
            case Schema::Q4: {
                std::vector<int> vars;
                if (int v = schema_binder(s, goal); v >= 0) {
                    vars.push_back(v);
                } else {
                    vars = variable_candidates();
                }
                for (int x : vars) {
                    Id a = A(), b = A();
                    Id t = T();
                    switch (s) {
                        case Schema::Q1: out.push_back(S.imp(S.all(x, a), S.subst_f(a, x, t))); break;
                        case Schema::Q2: out.push_back(S.imp(S.subst_f(a, x, t), S.ex(x, a))); break;
                        case Schema::Q3: out.push_back(S.imp(S.all(x, S.imp(a, b)), S.imp(a, S.all(x, b)))); break;
                        default: out.push_back(S.imp(S.all(x, S.imp(a, b)), S.imp(S.ex(x, a), b))); break;
                    }
                }
                break;
            }
            case Schema::E1: {
                Id t = T();
                out.push_back(S.eq(t, t));
                break;
            }
            case Schema::E2: {
                Id a = T(), b = T(), c = T();
                out.push_back(S.imp(S.eq(a, b), S.imp(S.eq(a, c), S.eq(b, c))));
                break;
            }
            case Schema::E3: {
                Id a = T(), b = T();
                out.push_back(S.imp(S.eq(a, b), S.eq(S.succ(a), S.succ(b))));
                break;
            }
            case Schema::E4:
            case Schema::E5:
            case Schema::E6:
            case Schema::E7: {
                Id a = T(), b = T(), c = T();
                bool plus = s == Schema::E4 || s == Schema::E5;
                bool left = s == Schema::E4 || s == Schema::E6;
                auto op = [&](Id l, Id r) { return plus ? S.plus(l, r) : S.times(l, r); };
                Id lhs = left ? op(a, c) : op(c, a);
                Id rhs = left ? op(b, c) : op(c, b);
                out.push_back(S.imp(S.eq(a, b), S.eq(lhs, rhs)));
                break;
            }
            case Schema::E8: {
                Id a = T(), b = T(), c = T();
                out.push_back(S.imp(S.eq(a, b), S.imp(S.gt(a, c), S.gt(b, c))));
                break;
            }
            case Schema::E9: {
                Id a = T(), b = T(), c = T();
                out.push_back(S.imp(S.eq(a, b), S.imp(S.gt(c, a), S.gt(c, b))));
                break;
            }
        }
        return out;
    }

    // forall ys. ((P[0/x] & forall x. (P -> P[Sx/x])) -> forall x. P)
    Id induction_pattern(int x, const std::vector<int>& ys) {
        Store& S = store_;
        Id p = S.fmeta();
        Id xv = S.var(x);
        Id body = S.imp(S.conj(S.subst_f(p, x, S.zero()), S.all(x, S.imp(p, S.subst_f(p, x, S.succ(xv))))), S.all(x, p));
        for (auto it = ys.rbegin(); it != ys.rend(); ++it) body = S.all(*it, body);
        return body;
    }

    bool induction_options(int g, Id f, std::vector<int> ys) {
        f = store_.resolve_f(f);
        const FNode n = store_.f(f);
        auto try_x = [&](int x) { return justify(g, induction_pattern(x, ys), Rule::Induction); };
        if (n.k == FK::Or) {
            Id a, b;
            if (!split_imp(f, a, b)) return false;
            int x = binder_of(b, FK::Forall);
            if (x >= 0) return try_x(x);
            for (int v : variable_candidates()) {
                if (try_x(v)) return true;
            }
            return false;
        }
        if (n.k == FK::Forall) {
            // Either the induction variable's prefix ends here or the
            // quantifier is one of the parameters.
            ys.push_back(n.sym);
            return induction_options(g, n.a, ys);
        }
        if (n.k == FK::Meta) {
            for (int v : variable_candidates()) {
                if (try_x(v)) return true;
            }
            // Further parameters: each costs at least three more symbols, so
            // the length bound ends this.
            for (int v : variable_candidates()) {
                std::vector<int> more = ys;
                more.push_back(v);
                if (justify_with_more_params(g, more)) return true;
            }
        }
        return false;
    }

    bool justify_with_more_params(int g, std::vector<int> ys) {
        // Pattern lower bound grows with each parameter; stop once it cannot
        // fit.
        if (symbols() + 3 * ys.size() + 37 >= symbol_limit() + store_.size_f(nodes_[g].f)) return false;
        for (int v : variable_candidates()) {
            if (justify(g, induction_pattern(v, ys), Rule::Induction)) return true;
        }
        for (int v : variable_candidates()) {
            std::vector<int> more = ys;
            more.push_back(v);
            if (justify_with_more_params(g, more)) return true;
        }
        return false;
    }

    // ---- completion once every goal is closed ----

    bool finish() {
        if (!propagate()) return false;
        if (over_budget()) return false;
        if (!calc_steps_plausible()) return false;

        if (int m = first_calc_tmeta(); m >= 0) return enumerate_calc_term(m);

        const auto& post = store_.postponed();
        for (std::size_t i = store_.active(); i < post.size(); ++i) {
            Postponed e = post[i];
            if (e.formula) continue;
            Id p = store_.resolve_t(e.p), q = store_.resolve_t(e.q);
            bool pf = store_.t(p).k == TK::Meta, qf = store_.t(q).k == TK::Meta;
            if (pf && qf) continue;
            return solve_flex_rigid(pf ? p : q, pf ? q : p);
        }
        for (std::size_t i = store_.active(); i < post.size(); ++i) {
            Postponed e = post[i];
            if (!e.formula) continue;
            Id p = store_.resolve_f(e.p);
            if (store_.f(p).k != FK::Meta) p = store_.resolve_f(e.q);
            int meta = store_.f(p).meta;
            return attempt_finish([&] { return store_.unify_f(store_.plain_f(meta), zero_eq_); });
        }
        for (std::size_t i = store_.active(); i < post.size(); ++i) {
            Postponed e = post[i];
            Id p = store_.resolve_t(e.p);
            if (store_.t(p).k != TK::Meta) p = store_.resolve_t(e.q);
            int meta = store_.t(p).meta;
            return attempt_finish([&] { return store_.unify_t(store_.plain_t(meta), store_.zero()); });
        }
        return build();
    }

    template <class F>
    bool attempt_finish(F&& apply) {
        Mark m = mark();
        if (apply() && propagate() && finish()) return true;
        undo(m);
        return false;
    }

    int first_calc_tmeta() {
        for (const auto& n : nodes_) {
            if (n.rule != Rule::Calc) continue;
            std::set<int> fm, tm;
            store_.collect_metas(n.f, fm, tm);
            if (!tm.empty()) return *tm.begin();
        }
        return -1;
    }

    // One smallest closed term per value, in order of size.  A calculation
    // step only sees the values of its terms, so no other term is needed.
    const std::vector<Term>& value_representatives(std::size_t max_size) {
        if (max_size <= rep_size_) return reps_;
        std::vector<std::vector<Term>> by_size{{}};
        std::set<fol::Natural> seen;
        reps_.clear();
        for (std::size_t s = 1; s <= max_size; ++s) {
            std::vector<Term> level;
            if (s == 1) level.push_back(Term::zero());
            if (s >= 2) {
                for (const auto& t : by_size[s - 1]) level.push_back(Term::succ(t));
            }
            for (std::size_t l = 1; l + 4 <= s; ++l) {
                for (const auto& a : by_size[l]) {
                    for (const auto& b : by_size[s - 3 - l]) {
                        level.push_back(Term::plus(a, b));
                        level.push_back(Term::times(a, b));
                    }
                }
            }
            for (const auto& t : level) {
                if (seen.insert(fol::eval_closed_term(t)).second) reps_.push_back(t);
            }
            by_size.push_back(std::move(level));
        }
        rep_size_ = max_size;
        return reps_;
    }

    bool enumerate_calc_term(int meta) {
        Id node = store_.plain_t(meta);
        std::size_t base = symbols();
        if (base >= symbol_limit()) return false;
        for (const auto& t : value_representatives(kCalcTermSize)) {
            if (base + t.size() - 1 >= symbol_limit()) break;
            if (attempt_finish([&] { return store_.unify_t(node, store_.from_term(t)); })) return true;
        }
        return false;
    }

    bool solve_flex_rigid(Id flex, Id rigid) {
        const TNode fl = store_.t(flex);
        const TNode rg = store_.t(rigid);
        Id target = store_.plain_t(fl.meta);
        for (int v : store_.subst_vars(fl.sub)) {
            if (attempt_finish([&] { return store_.unify_t(target, store_.var(v)) && store_.unify_t(flex, rigid); })) return true;
        }
        Id shape = kNil;
        return attempt_finish([&] {
            switch (rg.k) {
                case TK::Zero: shape = store_.zero(); break;
                case TK::Var: shape = store_.var(rg.sym); break;
                case TK::Succ: shape = store_.succ(store_.tmeta()); break;
                case TK::Plus: shape = store_.plus(store_.tmeta(), store_.tmeta()); break;
                case TK::Times: shape = store_.times(store_.tmeta(), store_.tmeta()); break;
                case TK::Meta: return false;
            }
            return store_.unify_t(target, shape) && store_.unify_t(flex, rigid);
        });
    }

    bool build() {
        // Remaining metavariables are unconstrained: 0 and 0 = 0 are the
        // smallest choices and closed, so no side condition can fail because
        // of them.
        Mark m = mark();
        for (std::size_t i = 0; i < store_.tmeta_count(); ++i) {
            if (store_.tmeta_bound(static_cast<int>(i))) continue;
            store_.unify_t(store_.plain_t(static_cast<int>(i)), store_.zero());
        }
        for (std::size_t i = 0; i < store_.fmeta_count(); ++i) {
            if (store_.fmeta_bound(static_cast<int>(i))) continue;
            store_.unify_f(store_.plain_f(static_cast<int>(i)), zero_eq_);
        }
        bool ok = propagate() && emit();
        undo(m);
        return ok && !minimize_;
    }

    // Orders the steps premises-first, checks the proof and records it.
    bool emit() {
        Proof p;
        std::map<int, std::size_t> index;  // node -> 1-based step
        std::unordered_map<Formula, std::size_t, fol::FormulaHash> by_formula;
        std::function<std::size_t(int)> place = [&](int i) -> std::size_t {
            while (nodes_[i].rule == Rule::Merged) i = nodes_[i].a;
            if (auto it = index.find(i); it != index.end()) return it->second;
            const PNode n = nodes_[i];
            Justification j;
            switch (n.rule) {
                case Rule::Axiom: j = Justification::axiom(n.schema); break;
                case Rule::PA: j = Justification::pa(n.k); break;
                case Rule::Extra: j = Justification::extra(n.k); break;
                case Rule::Induction: j = Justification::induction(); break;
                case Rule::Calc: j = Justification::calc(); break;
                case Rule::MP: {
                    std::size_t a = place(n.a);
                    std::size_t b = place(n.b);
                    j = Justification::mp(a, b);
                    break;
                }
                case Rule::Gen: j = Justification::gen(place(n.a), store_.name(n.sym)); break;
                default: throw std::logic_error("open step in a finished proof");
            }
            Formula f = store_.to_formula(n.f);
            if (auto it = by_formula.find(f); it != by_formula.end()) {
                index[i] = it->second;
                return it->second;
            }
            p.steps.push_back({f, j});
            by_formula.emplace(f, p.steps.size());
            index[i] = p.steps.size();
            return p.steps.size();
        };
        try {
            place(0);
        } catch (const std::logic_error&) {
            return false;
        }
        if (!is_contradiction(p.conclusion())) return false;
        if (proof_length(p, profile_.metric) >= limit_) return false;
        if (check_proof(p, profile_)) return false;
        best_ = std::move(p);
        if (minimize_) limit_ = proof_length(*best_, profile_.metric);
        return true;
    }

    Store store_;
    const CalculusProfile& profile_;
    std::size_t limit_;
    bool minimize_;
    std::vector<PNode> nodes_;
    std::vector<std::pair<int, PNode>> saved_;
    std::vector<Id> pa_;
    std::vector<Id> extra_;
    std::set<int> fixed_syms_;
    Id zero_eq_ = kNil;
    std::optional<Proof> best_;
    std::size_t expanded_ = 0;
    std::vector<Term> reps_;
    std::size_t rep_size_ = 0;
};

}  // namespace

std::size_t search_ceiling(const CalculusProfile& profile) {
    if (profile.ceiling) return *profile.ceiling;
    return profile.metric == LengthMetric::Steps ? kStepsCeiling : kSymbolsCeiling;
}

std::optional<Proof> search_contradiction(std::size_t max_length, const CalculusProfile& profile,
                                          const SearchOptions& options, SearchStats* stats) {
    const std::size_t ceiling = search_ceiling(profile);
    if (max_length > ceiling) {
        throw SearchRefused("max_length " + std::to_string(max_length) + " is above the feasible ceiling " +
                                std::to_string(ceiling),
                            ceiling);
    }
    auto start = std::chrono::steady_clock::now();
    Searcher s(profile, max_length, options.minimize);
    std::optional<Proof> found = s.run();
    if (stats) {
        stats->nodes = s.expanded();
        stats->elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    }
    return found;
}

}  // namespace gentzen::proof
