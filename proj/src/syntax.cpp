#include "gentzen/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace gentzen::fol {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct Term::Node {
    Kind kind;
    std::string name;
    Term a, b;
    std::size_t size = 1;
    std::size_t hash = 0;
    bool closed = true;

    explicit Node(Kind k) : kind(k), a(nullptr), b(nullptr) {}
    Node(Kind k, std::string n) : kind(k), name(std::move(n)), a(nullptr), b(nullptr) {}
    Node(Kind k, Term x, Term y) : kind(k), a(std::move(x)), b(std::move(y)) {}
};

namespace {

std::shared_ptr<const Term::Node> zero_node();

}  // namespace

Term::Term() : node_(zero_node()) {}

namespace {

std::shared_ptr<const Term::Node> zero_node() {
    static const auto node = [] {
        auto n = std::make_shared<Term::Node>(Term::Kind::Zero);
        n->hash = mix(0, 1);
        return std::shared_ptr<const Term::Node>(n);
    }();
    return node;
}

}  // namespace

Term Term::zero() { return Term(zero_node()); }

Term Term::succ(Term t) {
    auto n = std::make_shared<Node>(Kind::Succ, std::move(t), Term(nullptr));
    n->size = 1 + n->a.size();
    n->closed = n->a.closed();
    n->hash = mix(mix(0, 2), n->a.hash());
    return Term(std::move(n));
}

Term Term::plus(Term a, Term b) {
    auto n = std::make_shared<Node>(Kind::Plus, std::move(a), std::move(b));
    n->size = 3 + n->a.size() + n->b.size();
    n->closed = n->a.closed() && n->b.closed();
    n->hash = mix(mix(mix(0, 3), n->a.hash()), n->b.hash());
    return Term(std::move(n));
}

Term Term::times(Term a, Term b) {
    auto n = std::make_shared<Node>(Kind::Times, std::move(a), std::move(b));
    n->size = 3 + n->a.size() + n->b.size();
    n->closed = n->a.closed() && n->b.closed();
    n->hash = mix(mix(mix(0, 4), n->a.hash()), n->b.hash());
    return Term(std::move(n));
}

Term Term::var(std::string name) {
    if (!valid_variable_name(name)) throw std::invalid_argument("invalid variable name '" + name + "'");
    auto n = std::make_shared<Node>(Kind::Var, std::move(name));
    n->closed = false;
    n->hash = mix(mix(0, 5), std::hash<std::string>{}(n->name));
    return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const Term& Term::arg() const { return node_->a; }
const Term& Term::lhs() const { return node_->a; }
const Term& Term::rhs() const { return node_->b; }
const std::string& Term::name() const { return node_->name; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }
bool Term::closed() const { return node_->closed; }

bool operator==(const Term& x, const Term& y) {
    if (x.node_ == y.node_) return true;
    const auto& a = *x.node_;
    const auto& b = *y.node_;
    if (a.kind != b.kind || a.hash != b.hash || a.size != b.size) return false;
    switch (a.kind) {
        case Term::Kind::Zero: return true;
        case Term::Kind::Var: return a.name == b.name;
        case Term::Kind::Succ: return a.a == b.a;
        default: return a.a == b.a && a.b == b.b;
    }
}

struct Formula::Node {
    Kind kind;
    std::string var;
    Term ta, tb;
    Formula fa, fb;
    std::size_t size = 0;
    std::size_t hash = 0;

    explicit Node(Kind k) : kind(k), ta(nullptr), tb(nullptr), fa(nullptr), fb(nullptr) {}
};

namespace {

bool ends_open(const Formula& f) {
    if (f.is_quantifier()) return true;
    if (f.kind() == Formula::Kind::Not) return ends_open(f.sub());
    return false;
}

}  // namespace

Formula::Formula() : Formula(eq(Term::zero(), Term::zero())) {}

Formula Formula::eq(Term a, Term b) {
    auto n = std::make_shared<Node>(Kind::Eq);
    n->ta = std::move(a);
    n->tb = std::move(b);
    n->size = 3 + n->ta.size() + n->tb.size();
    n->hash = mix(mix(mix(0, 11), n->ta.hash()), n->tb.hash());
    return Formula(std::move(n));
}

Formula Formula::gt(Term a, Term b) {
    auto n = std::make_shared<Node>(Kind::Gt);
    n->ta = std::move(a);
    n->tb = std::move(b);
    n->size = 3 + n->ta.size() + n->tb.size();
    n->hash = mix(mix(mix(0, 12), n->ta.hash()), n->tb.hash());
    return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
    auto n = std::make_shared<Node>(Kind::Not);
    n->fa = std::move(f);
    n->size = 1 + n->fa.size();
    n->hash = mix(mix(0, 13), n->fa.hash());
    return Formula(std::move(n));
}

namespace {

template <class NodeT>
void finish_binary(NodeT& n, std::size_t tag) {
    n.size = 3 + n.fa.size() + n.fb.size() + (ends_open(n.fa) ? 2 : 0);
    n.hash = mix(mix(mix(0, tag), n.fa.hash()), n.fb.hash());
}

template <class NodeT>
void finish_quantifier(NodeT& n, std::size_t tag) {
    n.size = 3 + n.fa.size();
    n.hash = mix(mix(mix(0, tag), std::hash<std::string>{}(n.var)), n.fa.hash());
}

}  // namespace

Formula Formula::disjunction(Formula a, Formula b) {
    auto n = std::make_shared<Node>(Kind::Or);
    n->fa = std::move(a);
    n->fb = std::move(b);
    finish_binary(*n, 14);
    return Formula(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) {
    auto n = std::make_shared<Node>(Kind::And);
    n->fa = std::move(a);
    n->fb = std::move(b);
    finish_binary(*n, 15);
    return Formula(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
    if (!valid_variable_name(var)) throw std::invalid_argument("invalid variable name '" + var + "'");
    auto n = std::make_shared<Node>(Kind::Forall);
    n->var = std::move(var);
    n->fa = std::move(body);
    finish_quantifier(*n, 16);
    return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
    if (!valid_variable_name(var)) throw std::invalid_argument("invalid variable name '" + var + "'");
    auto n = std::make_shared<Node>(Kind::Exists);
    n->var = std::move(var);
    n->fa = std::move(body);
    finish_quantifier(*n, 17);
    return Formula(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) { return disjunction(negation(std::move(a)), std::move(b)); }

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_literal() const {
    return is_atomic() || (kind() == Kind::Not && sub().is_atomic());
}

const Term& Formula::lhs_term() const { return node_->ta; }
const Term& Formula::rhs_term() const { return node_->tb; }
const Formula& Formula::sub() const { return node_->fa; }
const Formula& Formula::left() const { return node_->fa; }
const Formula& Formula::right() const { return node_->fb; }
const std::string& Formula::var() const { return node_->var; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& x, const Formula& y) {
    if (x.node_ == y.node_) return true;
    const auto& a = *x.node_;
    const auto& b = *y.node_;
    if (a.kind != b.kind || a.hash != b.hash || a.size != b.size) return false;
    switch (a.kind) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt: return a.ta == b.ta && a.tb == b.tb;
        case Formula::Kind::Not: return a.fa == b.fa;
        case Formula::Kind::Or:
        case Formula::Kind::And: return a.fa == b.fa && a.fb == b.fb;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return a.var == b.var && a.fa == b.fa;
    }
    return false;
}

namespace {

int cmp_term(const Term& a, const Term& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Term::Kind::Zero: return 0;
        case Term::Kind::Var: return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
        case Term::Kind::Succ: return cmp_term(a.arg(), b.arg());
        default:
            if (int c = cmp_term(a.lhs(), b.lhs())) return c;
            return cmp_term(a.rhs(), b.rhs());
    }
}

int cmp_formula(const Formula& a, const Formula& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt:
            if (int c = cmp_term(a.lhs_term(), b.lhs_term())) return c;
            return cmp_term(a.rhs_term(), b.rhs_term());
        case Formula::Kind::Not: return cmp_formula(a.sub(), b.sub());
        case Formula::Kind::Or:
        case Formula::Kind::And:
            if (int c = cmp_formula(a.left(), b.left())) return c;
            return cmp_formula(a.right(), b.right());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            if (a.var() != b.var()) return a.var() < b.var() ? -1 : 1;
            return cmp_formula(a.sub(), b.sub());
    }
    return 0;
}

void print_into(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Zero: out += '0'; return;
        case Term::Kind::Var: out += t.name(); return;
        case Term::Kind::Succ:
            out += 'S';
            print_into(t.arg(), out);
            return;
        case Term::Kind::Plus:
        case Term::Kind::Times:
            out += '(';
            print_into(t.lhs(), out);
            out += t.kind() == Term::Kind::Plus ? " + " : " * ";
            print_into(t.rhs(), out);
            out += ')';
            return;
    }
}

void print_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Formula::Kind::Eq:
        case Formula::Kind::Gt:
            out += '(';
            print_into(f.lhs_term(), out);
            out += f.kind() == Formula::Kind::Eq ? " = " : " > ";
            print_into(f.rhs_term(), out);
            out += ')';
            return;
        case Formula::Kind::Not:
            out += '!';
            print_into(f.sub(), out);
            return;
        case Formula::Kind::Or:
        case Formula::Kind::And: {
            out += '(';
            bool wrap = ends_open(f.left());
            if (wrap) out += '(';
            print_into(f.left(), out);
            if (wrap) out += ')';
            out += f.kind() == Formula::Kind::Or ? " | " : " & ";
            print_into(f.right(), out);
            out += ')';
            return;
        }
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            out += f.kind() == Formula::Kind::Forall ? "forall " : "exists ";
            out += f.var();
            out += ". ";
            print_into(f.sub(), out);
            return;
    }
}

// ---------------------------------------------------------------------------
// Parsing

enum class Tok { LParen, RParen, Zero, Numeral, Succ, Plus, Times, Eq, Gt, Not, And, Or, Arrow, Dot, Forall, Exists, Ident, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Zero: return "'0'";
        case Tok::Numeral: return "numeral";
        case Tok::Succ: return "'S'";
        case Tok::Plus: return "'+'";
        case Tok::Times: return "'*'";
        case Tok::Eq: return "'='";
        case Tok::Gt: return "'>'";
        case Tok::Not: return "'!'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Arrow: return "'->'";
        case Tok::Dot: return "'.'";
        case Tok::Forall: return "'forall'";
        case Tok::Exists: return "'exists'";
        case Tok::Ident: return "variable";
        case Tok::End: return "end of input";
    }
    return "?";
}

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        auto single = [&](Tok k) {
            out.push_back({k, start, std::string(1, c)});
            ++i;
        };
        switch (c) {
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            case 'S': single(Tok::Succ); continue;
            case '+': single(Tok::Plus); continue;
            case '*': single(Tok::Times); continue;
            case '=': single(Tok::Eq); continue;
            case '>': single(Tok::Gt); continue;
            case '!': single(Tok::Not); continue;
            case '&': single(Tok::And); continue;
            case '|': single(Tok::Or); continue;
            case '.': single(Tok::Dot); continue;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    out.push_back({Tok::Arrow, start, "->"});
                    i += 2;
                    continue;
                }
                throw SyntaxError("unknown symbol '-'", start);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string digits(text.substr(start, i - start));
            out.push_back({digits == "0" ? Tok::Zero : Tok::Numeral, start, digits});
            continue;
        }
        if (ident_start(c)) {
            while (i < text.size() && ident_char(text[i])) ++i;
            std::string word(text.substr(start, i - start));
            Tok k = word == "forall" ? Tok::Forall : word == "exists" ? Tok::Exists : Tok::Ident;
            out.push_back({k, start, std::move(word)});
            continue;
        }
        throw SyntaxError(std::string("unknown symbol '") + c + "'", start);
    }
    out.push_back({Tok::End, text.size(), ""});
    return out;
}

constexpr std::size_t kMaxNumeralSugar = 100000;

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Formula formula_only() {
        Formula f = implication();
        expect(Tok::End);
        return f;
    }

    Term term_only() {
        Term t = sum();
        expect(Tok::End);
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(Tok k) const { return peek().kind == k; }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, peek().offset); }

    void expect(Tok k) {
        if (!at(k)) fail(std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
        ++pos_;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (at(Tok::Arrow)) {
            ++pos_;
            Formula rhs = implication();
            return Formula::implies(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (at(Tok::Or)) {
            ++pos_;
            f = Formula::disjunction(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (at(Tok::And)) {
            ++pos_;
            f = Formula::conjunction(std::move(f), unary());
        }
        return f;
    }

    Formula unary() {
        switch (peek().kind) {
            case Tok::Not:
                ++pos_;
                return Formula::negation(unary());
            case Tok::Forall:
            case Tok::Exists: {
                bool universal = at(Tok::Forall);
                ++pos_;
                if (!at(Tok::Ident)) fail(std::string("expected variable, found ") + describe(peek().kind));
                std::string v = peek().text;
                ++pos_;
                expect(Tok::Dot);
                if (at(Tok::End) || at(Tok::RParen)) fail("missing quantifier body");
                Formula body = implication();
                return universal ? Formula::forall(std::move(v), std::move(body))
                                 : Formula::exists(std::move(v), std::move(body));
            }
            case Tok::LParen: {
                // Either a parenthesised term starting an atom, or a
                // parenthesised formula.  Try the atom first.
                std::size_t save = pos_;
                std::optional<SyntaxError> atom_error;
                try {
                    return atom();
                } catch (const SyntaxError& e) {
                    atom_error = e;
                }
                pos_ = save;
                try {
                    ++pos_;
                    Formula f = implication();
                    expect(Tok::RParen);
                    return f;
                } catch (const SyntaxError& e) {
                    if (atom_error->offset() > e.offset()) throw *atom_error;
                    throw;
                }
            }
            case Tok::End: fail("expected formula, found end of input");
            default: return atom();
        }
    }

    Formula atom() {
        Term lhs = sum();
        if (at(Tok::Eq)) {
            ++pos_;
            return Formula::eq(std::move(lhs), sum());
        }
        if (at(Tok::Gt)) {
            ++pos_;
            return Formula::gt(std::move(lhs), sum());
        }
        fail(std::string("expected '=' or '>', found ") + describe(peek().kind));
    }

    Term sum() {
        Term t = product();
        while (at(Tok::Plus)) {
            ++pos_;
            t = Term::plus(std::move(t), product());
        }
        return t;
    }

    Term product() {
        Term t = prefixed();
        while (at(Tok::Times)) {
            ++pos_;
            t = Term::times(std::move(t), prefixed());
        }
        return t;
    }

    Term prefixed() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Succ:
                ++pos_;
                return Term::succ(prefixed());
            case Tok::Zero:
                ++pos_;
                return Term::zero();
            case Tok::Numeral: {
                if (tok.text.size() > 6 || std::stoul(tok.text) > kMaxNumeralSugar) fail("numeral too large");
                std::size_t n = std::stoul(tok.text);
                ++pos_;
                Term t;
                for (std::size_t i = 0; i < n; ++i) t = Term::succ(std::move(t));
                return t;
            }
            case Tok::Ident: {
                ++pos_;
                return Term::var(tok.text);
            }
            case Tok::LParen: {
                ++pos_;
                Term t = sum();
                expect(Tok::RParen);
                return t;
            }
            default: fail(std::string("expected term, found ") + describe(tok.kind));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

bool structural_less(const Formula& a, const Formula& b) { return cmp_formula(a, b) < 0; }
bool structural_less(const Term& a, const Term& b) { return cmp_term(a, b) < 0; }

std::string print(const Term& t) {
    std::string out;
    print_into(t, out);
    return out;
}

std::string print(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

Formula parse_formula(std::string_view text) { return Parser(text).formula_only(); }
Term parse_term(std::string_view text) { return Parser(text).term_only(); }

bool valid_variable_name(std::string_view name) {
    if (name.empty() || !ident_start(name[0])) return false;
    for (char c : name) {
        if (!ident_char(c)) return false;
    }
    return name != "forall" && name != "exists";
}

}  // namespace gentzen::fol
