#pragma once

// Terms and formulas of first-order arithmetic (0, S, +, *, =, >).
//
// Trees are immutable and share structure, so copying a Term or Formula is
// a reference-count bump.  Every node caches its printed token count and a
// structural hash.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gentzen::fol {

class Term {
public:
    enum class Kind : std::uint8_t { Zero, Succ, Plus, Times, Var };

    Term();  // 0

    static Term zero();
    static Term succ(Term t);
    static Term plus(Term a, Term b);
    static Term times(Term a, Term b);
    static Term var(std::string name);

    Kind kind() const;
    const Term& arg() const;  // Succ
    const Term& lhs() const;  // Plus, Times
    const Term& rhs() const;
    const std::string& name() const;  // Var

    // Tokens in the canonical printing.
    std::size_t size() const;
    std::size_t hash() const;
    bool closed() const;

    friend bool operator==(const Term& a, const Term& b);

    // Implementation detail; the node layout lives in syntax.cpp.
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const Node> node_;
};

class Formula {
public:
    enum class Kind : std::uint8_t { Eq, Gt, Not, Or, And, Forall, Exists };

    Formula();  // 0 = 0

    static Formula eq(Term a, Term b);
    static Formula gt(Term a, Term b);
    static Formula negation(Formula f);
    static Formula disjunction(Formula a, Formula b);
    static Formula conjunction(Formula a, Formula b);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);

    // a -> b, spelled !a | b.
    static Formula implies(Formula a, Formula b);

    Kind kind() const;
    bool is_atomic() const { return kind() == Kind::Eq || kind() == Kind::Gt; }
    bool is_literal() const;  // atomic, or the negation of an atomic formula
    bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
    bool is_binary() const { return kind() == Kind::Or || kind() == Kind::And; }

    const Term& lhs_term() const;  // Eq, Gt
    const Term& rhs_term() const;
    const Formula& sub() const;    // Not, Forall, Exists
    const Formula& left() const;   // Or, And
    const Formula& right() const;
    const std::string& var() const;  // Forall, Exists

    std::size_t size() const;
    std::size_t hash() const;

    friend bool operator==(const Formula& a, const Formula& b);

    // Implementation detail; the node layout lives in syntax.cpp.
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Deterministic total order (size first, then structure); used for sorted
// containers and canonical enumeration.
bool structural_less(const Formula& a, const Formula& b);
bool structural_less(const Term& a, const Term& b);

// Canonical printing: binary nodes and atoms in parentheses, numerals as
// S...S0, `forall x. body`.  Re-parses to the same tree.
std::string print(const Term& t);
std::string print(const Formula& f);

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

// Variable names: a lowercase letter followed by lowercase letters, digits,
// underscores or primes; `forall` and `exists` are reserved.
bool valid_variable_name(std::string_view name);

}  // namespace gentzen::fol
