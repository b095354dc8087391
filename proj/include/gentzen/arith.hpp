#pragma once

// Semantics and standard constructions over the arithmetic syntax:
// free variables, negation normal form, substitution, evaluation over the
// standard model, bounded evaluation, the induction schema and the PA
// axiom list.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gentzen/syntax.hpp"

namespace gentzen::fol {

using Natural = std::uint64_t;
using Assignment = std::map<std::string, Natural, std::less<>>;

std::set<std::string> free_vars(const Formula& f);
std::set<std::string> vars(const Term& t);
bool occurs_free(const std::string& x, const Formula& f);
bool is_sentence(const Formula& f);

// Negation pushed onto atoms; ! flips & and |, forall and exists, and double
// negations cancel.
Formula nnf(const Formula& f);
bool is_nnf(const Formula& f);

Term numeral(Natural n);

// Replaces the free occurrences of x by a closed term.  Throws
// std::invalid_argument when t is not closed.
Formula substitute(const Formula& f, const std::string& x, const Term& t);

// No free occurrence of x in f lies under a binder of a variable of t.
bool is_free_for(const Term& t, const std::string& x, const Formula& f);

// Substitution of an arbitrary term; throws std::invalid_argument when t is
// not free for x in f.
Formula substitute_free(const Formula& f, const std::string& x, const Term& t);
Term substitute(const Term& t, const std::string& x, const Term& by);

// Throws std::invalid_argument for open terms and std::overflow_error when
// the value leaves 64 bits.
Natural eval_closed_term(const Term& t);
Natural eval_term(const Term& t, const Assignment& env);

// Atomic or negated atomic sentence.  Throws std::invalid_argument otherwise.
bool eval_atomic(const Formula& s);

// Every quantifier ranges over {0, ..., bound}.  Throws std::invalid_argument
// on unassigned free variables and std::overflow_error on overflow.
bool evaluate(const Formula& f, const Assignment& env, Natural bound);

struct TruthB {
    enum class Verdict { True, False, Unknown };
    Verdict verdict;
    Natural bound;

    static TruthB true_at(Natural b) { return {Verdict::True, b}; }
    static TruthB false_at(Natural b) { return {Verdict::False, b}; }
    static TruthB unknown(Natural b) { return {Verdict::Unknown, b}; }

    friend bool operator==(const TruthB&, const TruthB&) = default;
};

// "TRUE@8", "FALSE@8", "UNKNOWN@8".
std::string to_string(const TruthB& t);

// Truth when every quantifier ranges over {0, ..., bound}.  Exact truth in
// the standard model for sentences whose quantifiers are semantically
// bounded by `bound`; a finite-domain verdict otherwise.  Unknown for open
// formulas and on arithmetic overflow.
TruthB eval_bounded(const Formula& s, Natural bound);

// forall ys. ((phi(0) & forall x. (phi(x) -> phi(Sx))) -> forall x. phi(x)),
// with -> written as !_|_.  Throws std::invalid_argument when phi has free
// variables outside {x} and ys.
Formula induction_instance(const Formula& phi, const std::string& x, const std::vector<std::string>& ys);

// The non-induction axioms, in a fixed order (see docs/axioms.md).
const std::vector<Formula>& pa_axioms();

}  // namespace gentzen::fol
