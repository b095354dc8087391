// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gentzen/arith.hpp"
#include "gentzen/game.hpp"
#include "gentzen/ordinal.hpp"
#include "gentzen/proof.hpp"
#include "gentzen/stabilization.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/mutations.hpp"

using namespace gentzen;
using fol::Formula;
using fol::Term;
using ord::List;
using ord::Ordering3;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (examples_.size() < 3) examples_.push_back(what());
    }
    std::size_t checks() const { return checks_; }
    std::size_t failures() const { return failures_; }
    std::string summary() const {
        std::string s = "checks=" + std::to_string(checks_) + " failures=" + std::to_string(failures_);
        for (const auto& e : examples_) s += " [" + e + "]";
        return s;
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::vector<std::string> examples_;
};

int failed_criteria = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = limit_seconds <= 0 || secs <= limit_seconds;
    bool pass = o.pass && in_time;
    if (!pass) ++failed_criteria;
    char timing[64];
    if (limit_seconds > 0) {
        std::snprintf(timing, sizeof timing, "time=%.1fs limit=%.0fs", secs, limit_seconds);
    } else {
        std::snprintf(timing, sizeof timing, "time=%.1fs", secs);
    }
    std::printf("%s  %-22s %s %s\n", pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), timing);
    std::fflush(stdout);
}

Outcome from(const Tally& t, const std::string& extra = "") {
    return {t.failures() == 0, (extra.empty() ? "" : extra + " ") + t.summary()};
}

// ---- ordinal oracles ----

// Reference order from the multiset ordering: w^a1 + ... + w^an lies below
// w^b1 + ... + w^bm exactly when the multiset {a_i} lies below {b_j}, that is
// the two differ and every exponent occurring more often on the left is
// dominated by some larger exponent occurring more often on the right.
// Constituent order plays no part, so this shares nothing with compare.
int cnf_compare(const List& a, const List& b);

bool same(const List& a, const List& b) { return cnf_compare(a, b) == 0; }

std::size_t multiplicity(const List& m, const List& x) {
    return static_cast<std::size_t>(std::count_if(m.items().begin(), m.items().end(), [&](const List& e) { return same(e, x); }));
}

bool multiset_below(const List& a, const List& b) {
    bool differ = false;
    for (const auto* side : {&a, &b}) {
        for (const auto& x : side->items()) {
            std::size_t ma = multiplicity(a, x), mb = multiplicity(b, x);
            if (ma != mb) differ = true;
            if (ma <= mb) continue;
            bool dominated = std::any_of(b.items().begin(), b.items().end(), [&](const List& y) {
                return cnf_compare(x, y) < 0 && multiplicity(b, y) > multiplicity(a, y);
            });
            if (!dominated) return false;
        }
    }
    return differ;
}

int cnf_compare(const List& a, const List& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty() ? 0 : (a.empty() ? -1 : 1);
    if (multiset_below(a, b)) return -1;
    if (multiset_below(b, a)) return 1;
    return 0;
}

int as_int(Ordering3 o) { return o == Ordering3::Less ? -1 : o == Ordering3::Equal ? 0 : 1; }

std::size_t leading_opens(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        if (c == ']') break;
        if (c == '[') ++n;
    }
    return n;
}

// Unordered rooted trees with n nodes, n = 1..8.
constexpr std::size_t kRootedTrees[] = {1, 1, 2, 4, 9, 20, 48, 115};

// ---- formula oracles ----

bool trial_division_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Term replace_var(const Term& t, const std::string& x, const Term& by) {
    switch (t.kind()) {
        case Term::Kind::Zero: return t;
        case Term::Kind::Var: return t.name() == x ? by : t;
        case Term::Kind::Succ: return Term::succ(replace_var(t.arg(), x, by));
        case Term::Kind::Plus: return Term::plus(replace_var(t.lhs(), x, by), replace_var(t.rhs(), x, by));
        case Term::Kind::Times: return Term::times(replace_var(t.lhs(), x, by), replace_var(t.rhs(), x, by));
    }
    return t;
}

// Substitution in a quantifier-free formula.
Formula replace_var(const Formula& f, const std::string& x, const Term& by) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Eq: return Formula::eq(replace_var(f.lhs_term(), x, by), replace_var(f.rhs_term(), x, by));
        case K::Gt: return Formula::gt(replace_var(f.lhs_term(), x, by), replace_var(f.rhs_term(), x, by));
        case K::Not: return Formula::negation(replace_var(f.sub(), x, by));
        case K::Or: return Formula::disjunction(replace_var(f.left(), x, by), replace_var(f.right(), x, by));
        case K::And: return Formula::conjunction(replace_var(f.left(), x, by), replace_var(f.right(), x, by));
        default: throw std::invalid_argument("template oracle handles quantifier-free formulas only");
    }
}

// Checks f against  forall ys. ((phi(0) & forall x. (phi(x) -> phi(Sx))) -> forall x. phi(x))
// with P -> Q read as !P | Q.
bool matches_induction_template(const Formula& f, const Formula& phi, const std::string& x,
                                const std::vector<std::string>& ys) {
    using K = Formula::Kind;
    Formula cur = f;
    for (const auto& y : ys) {
        if (cur.kind() != K::Forall || cur.var() != y) return false;
        cur = cur.sub();
    }
    if (cur.kind() != K::Or || cur.left().kind() != K::Not) return false;
    const Formula& premise = cur.left().sub();
    const Formula& conclusion = cur.right();
    if (conclusion.kind() != K::Forall || conclusion.var() != x || conclusion.sub() != phi) return false;
    if (premise.kind() != K::And) return false;
    if (premise.left() != replace_var(phi, x, Term::zero())) return false;
    const Formula& step = premise.right();
    if (step.kind() != K::Forall || step.var() != x) return false;
    const Formula& body = step.sub();
    if (body.kind() != K::Or || body.left().kind() != K::Not) return false;
    return body.left().sub() == phi && body.right() == replace_var(phi, x, Term::succ(Term::var(x)));
}

bool truth_is(const fol::TruthB& t, fol::TruthB::Verdict v) { return t.verdict == v; }

std::vector<Formula> game_corpus() {
    testing::SentenceGenerator gen(2024);
    std::vector<Formula> out;
    while (out.size() < 200) out.push_back(gen.nnf_sentence(3));
    return out;
}

}  // namespace

int main() {
    const auto corpus8 = ord::enumerate_ordinals(8);

    criterion("order-laws", 120, [&] {
        Tally t;
        std::size_t expected = 0;
        for (std::size_t n : kRootedTrees) expected += n;
        t.check(corpus8.size() == expected, [&] { return "corpus size " + std::to_string(corpus8.size()); });
        const std::size_t n = corpus8.size();
        std::vector<int> table(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                int c = as_int(ord::compare(corpus8[i], corpus8[j]));
                table[i * n + j] = c;
                t.check(c == cnf_compare(corpus8[i], corpus8[j]), [&] { return "oracle disagrees"; });
                t.check((c == 0) == (i == j), [&] { return "equal iff identical"; });
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                t.check(table[i * n + j] == -table[j * n + i], [&] {
                    return "antisymmetry " + ord::render_brackets(corpus8[i]) + " " + ord::render_brackets(corpus8[j]);
                });
            }
        }
        // n^3 = 8e6 triples, below the sampling threshold.
        std::size_t triples = 0, bad = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (table[i * n + j] >= 0) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    ++triples;
                    if (table[j * n + k] < 0 && table[i * n + k] >= 0) ++bad;
                }
            }
        }
        t.check(bad == 0, [&] { return std::to_string(bad) + " transitivity failures"; });
        return from(t, "ordinals=" + std::to_string(n) + " pairs=" + std::to_string(n * n) +
                           " triples=" + std::to_string(n * n * n));
    });

    criterion("order-facts", 0, [] {
        Tally t;
        const char* chain[] = {"[]", "[[]]", "[[],[]]", "[[],[],[]]", "[[],[],[],[]]", "[[[]]]"};
        for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
            for (std::size_t j = i + 1; j < std::size(chain); ++j) {
                t.check(ord::less(ord::parse_ordinal(chain[i]), ord::parse_ordinal(chain[j])),
                        [&] { return std::string(chain[i]) + " < " + chain[j]; });
            }
        }
        t.check(ord::compare(ord::parse_ordinal("[[[],[]]]"), ord::parse_ordinal("[[[]],[[]]]")) == Ordering3::Greater,
                [] { return "[[[],[]]] > [[[]],[[]]]"; });
        t.check(ord::render_cnf(ord::parse_ordinal("[[[]]]")) == "ω", [] { return "cnf of [[[]]]"; });
        t.check(ord::render_cnf(ord::parse_ordinal("[[[],[]]]")) == "ω^2", [] { return "cnf of [[[],[]]]"; });
        t.check(ord::render_cnf(ord::parse_ordinal("[[[]],[[]]]")) == "ω·2", [] { return "cnf of [[[]],[[]]]"; });
        return from(t);
    });

    criterion("height-law", 120, [&] {
        Tally t;
        for (const auto& a : corpus8) {
            std::size_t h = ord::height(a);
            t.check(h == leading_opens(ord::render_brackets(a)), [&] { return "height of " + ord::render_brackets(a); });
            for (const auto& b : corpus8) {
                if (cnf_compare(a, b) <= 0) {
                    t.check(h <= ord::height(b), [&] { return ord::render_brackets(a) + " <= " + ord::render_brackets(b); });
                }
            }
        }
        return from(t);
    });

    criterion("inflation-successor", 120, [&] {
        Tally t;
        for (std::size_t i = 0; i < corpus8.size(); ++i) {
            const List& a = corpus8[i];
            t.check(cnf_compare(a, ord::omega_power(a)) < 0, [&] { return "w^a > a for " + ord::render_brackets(a); });
            const List next = ord::successor(a);
            t.check(ord::is_ordinal(next) && cnf_compare(a, next) < 0, [&] { return "a < a+1"; });
            // The corpus is sorted, so every later element is at least a+1.
            for (std::size_t j = i + 1; j < corpus8.size(); ++j) {
                t.check(cnf_compare(corpus8[j], next) >= 0, [&] {
                    return ord::render_brackets(corpus8[j]) + " between " + ord::render_brackets(a) + " and its successor";
                });
            }
        }
        return from(t);
    });

    criterion("descent-stabilization", 120, [] {
        Tally t;
        const auto starts = ord::enumerate_ordinals(7);
        std::size_t programs = 0, certified = 0;
        const std::size_t budget = 100000;
        for (const auto& start : starts) {
            for (std::size_t seed = 0; seed <= 3; ++seed) {
                ++programs;
                auto program = seq::canonical_descent(start, seed);
                auto r = seq::monitor(program, budget);
                const std::string name = program.name;
                // Independent replay: outputs must weakly decrease and reach [].
                seq::State s = program.initial_state;
                std::vector<List> outputs;
                bool weak = true;
                while (outputs.size() < budget) {
                    auto e = program.step(s);
                    if (!outputs.empty() && cnf_compare(outputs.back(), e.output) < 0) weak = false;
                    outputs.push_back(e.output);
                    if (e.output.empty()) break;
                    s = e.next;
                }
                const bool reached = !outputs.empty() && outputs.back().empty();
                std::size_t strict = 0;
                for (std::size_t i = 1; i < outputs.size(); ++i) strict += cnf_compare(outputs[i], outputs[i - 1]) < 0;
                t.check(weak && !r.violation, [&] { return name + " violates weak descent"; });
                t.check(reached && r.final_value.empty(), [&] { return name + " does not reach []"; });
                t.check(r.certified() && r.stabilized_at->index == outputs.size(),
                        [&] { return name + " certificate disagrees with the replay"; });
                t.check(r.strict_decreases == strict, [&] { return name + " strict decrease count"; });
                certified += r.certified();
            }
        }
        return from(t, "programs=" + std::to_string(programs) + " certified=" + std::to_string(certified));
    });

    criterion("nnf-equivalence", 0, [] {
        Tally t;
        testing::SentenceGenerator gen(500);
        for (int i = 0; i < 500; ++i) {
            Formula s = gen.sentence(4);
            Formula n = fol::nnf(s);
            t.check(fol::is_nnf(n) && fol::nnf(n) == n, [&] { return "idempotence on " + fol::print(s); });
            for (fol::Natural b = 0; b <= 3; ++b) {
                t.check(fol::eval_bounded(s, b) == fol::eval_bounded(n, b), [&] { return "truth changes on " + fol::print(s); });
            }
        }
        return from(t, "sentences=500 bounds=0..3");
    });

    criterion("prime-formula", 0, [] {
        Tally t;
        const Formula p = fol::parse_formula("(z > S0) & forall x. forall y. ((!(x * y = z) | (x = S0)) | (y = S0))");
        for (unsigned z = 2; z <= 12; ++z) {
            auto v = fol::eval_bounded(fol::substitute(p, "z", fol::numeral(z)), 12);
            auto want = trial_division_prime(z) ? fol::TruthB::true_at(12) : fol::TruthB::false_at(12);
            t.check(v == want, [&] { return "z=" + std::to_string(z) + " gives " + fol::to_string(v); });
        }
        return from(t, "z=2..12 B=12");
    });

    const auto sentences = game_corpus();

    criterion("game-minimax", 300, [&] {
        Tally t;
        std::size_t reductions = 0, lines = 0, edges = 0;
        std::function<void(const game::StrategyTree&)> walk = [&](const game::StrategyTree& n) {
            for (const auto& c : n->children) {
                ++edges;
                t.check(cnf_compare(c->measure, n->measure) < 0, [] { return "measure does not decrease"; });
                walk(c);
            }
        };
        for (std::size_t i = 0; i < sentences.size(); ++i) {
            const Formula& s = sentences[i];
            const fol::Natural b = i % 4;
            auto state = game::GameState::initial({s}, b);
            auto tree = game::synthesize_reduction(state, game::default_depth_budget(state));
            bool truth = truth_is(fol::eval_bounded(s, b), fol::TruthB::Verdict::True);
            t.check(tree.has_value() == truth, [&] { return fol::print(s) + " at B=" + std::to_string(b); });
            if (!tree) continue;
            ++reductions;
            auto r = game::replay(*tree);
            lines += r.lines;
            t.check(r.lines > 0 && r.wins == r.lines, [&] { return "replay loses on " + fol::print(s); });
            walk(*tree);
        }
        auto none = game::synthesize_reduction(game::GameState::initial({fol::parse_formula("0 = S0")}, 1), 5);
        t.check(!none, [] { return "0 = S0 has a reduction"; });
        return from(t, "sentences=" + std::to_string(sentences.size()) + " reductions=" + std::to_string(reductions) +
                           " replay_lines=" + std::to_string(lines) + " edges=" + std::to_string(edges));
    });

    criterion("component-descent", 0, [&] {
        Tally t;
        std::size_t components = 0;
        std::vector<Formula> all = sentences;
        testing::SentenceGenerator gen(4);
        for (int i = 0; i < 300; ++i) all.push_back(gen.nnf_sentence(4));
        for (const auto& s : all) {
            for (const auto& c : game::components(s, 4)) {
                ++components;
                t.check(cnf_compare(game::degree(c), game::degree(s)) < 0, [&] { return fol::print(c) + " from " + fol::print(s); });
            }
        }
        return from(t, "sentences=" + std::to_string(all.size()) + " components=" + std::to_string(components));
    });

    criterion("proof-kernel", 600, [] {
        Tally t;
        std::size_t mutations = 0;
        for (const auto& fx : testing::proof_fixtures()) {
            proof::Proof p = testing::load_fixture(fx.name);
            const Formula goal = fol::parse_formula(fx.goal);
            t.check(testing::accepted(p, goal), [&] { return fx.name + " rejected"; });
            for (const auto& m : testing::single_step_mutations(p)) {
                ++mutations;
                t.check(!testing::accepted(m.proof, goal), [&] { return fx.name + ": " + m.label + " accepted"; });
            }
        }

        proof::CalculusProfile bogus;
        bogus.extra_axioms.push_back(fol::parse_formula("0 = S0"));
        auto found = proof::search_contradiction(87, bogus);
        t.check(found && !proof::check_proof(*found, bogus) && proof::is_contradiction(found->conclusion()),
                [] { return "no contradiction from 0 = S0"; });
        std::size_t exploded = 0;
        if (found) {
            for (const char* target : {"0 = S0", "forall x. x > x", "exists y. !(y = y)"}) {
                auto e = proof::explode(*found, fol::parse_formula(target), bogus);
                ++exploded;
                t.check(!proof::check_proof(e, bogus) && e.conclusion() == fol::parse_formula(target),
                        [&] { return std::string("explode to ") + target; });
            }
        }

        t.check(!proof::search_contradiction(5), [] { return "contradiction below 5"; });
        const std::size_t ceiling = proof::search_ceiling({});
        proof::SearchStats stats;
        auto at_ceiling = proof::search_contradiction(ceiling, {}, {}, &stats);
        t.check(!at_ceiling, [] { return "contradiction found without extra axioms"; });
        return from(t, "fixtures=" + std::to_string(testing::proof_fixtures().size()) + " mutations=" +
                           std::to_string(mutations) + " bogus_length=" +
                           std::to_string(found ? proof::proof_length(*found) : 0) + " exploded=" +
                           std::to_string(exploded) + " ceiling=" + std::to_string(ceiling) +
                           " ceiling_nodes=" + std::to_string(stats.nodes) +
                           " ceiling_ms=" + std::to_string(stats.elapsed.count()));
    });

    criterion("induction-template", 0, [] {
        Tally t;
        struct Case {
            const char* phi;
            std::vector<std::string> ys;
        };
        const Case cases[] = {{"x + 0 = x", {}}, {"0 + x = x", {}}, {"x + y = y + x", {"y"}}};
        for (const auto& c : cases) {
            const Formula phi = fol::parse_formula(c.phi);
            const Formula inst = fol::induction_instance(phi, "x", c.ys);
            t.check(matches_induction_template(inst, phi, "x", c.ys), [&] { return std::string(c.phi); });
            t.check(fol::is_sentence(inst), [&] { return std::string(c.phi) + " not closed"; });
            proof::Proof single{{{inst, proof::Justification::induction()}}};
            t.check(!proof::check_proof(single), [&] { return std::string(c.phi) + " not accepted as an axiom"; });
        }
        // The induction step of the left-identity fixture has the same shape.
        bool seen = false;
        for (const auto& s : testing::load_fixture("zero_left_identity").steps) {
            if (s.why.kind != proof::Justification::Kind::Induction) continue;
            seen = true;
            t.check(matches_induction_template(s.formula, fol::parse_formula("0 + x = x"), "x", {}),
                    [] { return "fixture induction step"; });
        }
        t.check(seen, [] { return "fixture has no induction step"; });
        return from(t, "instances=3");
    });

    std::printf("%s  %d criteria failed\n", failed_criteria == 0 ? "PASS" : "FAIL", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
