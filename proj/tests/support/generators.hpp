#pragma once

// Seeded random sentence generators shared by the unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "gentzen/arith.hpp"
#include "gentzen/syntax.hpp"

namespace gentzen::testing {

class SentenceGenerator {
public:
    explicit SentenceGenerator(unsigned seed) : rng_(seed) {}

    // A closed formula of quantifier/connective depth at most `depth`.
    fol::Formula sentence(int depth) {
        std::vector<std::string> scope;
        return formula(depth, scope);
    }

    fol::Formula nnf_sentence(int depth) { return fol::nnf(sentence(depth)); }

    fol::Term term(int depth, const std::vector<std::string>& scope) {
        int choice = pick(depth <= 0 ? 2 : 5);
        switch (choice) {
            case 0:
                if (!scope.empty() && pick(3) != 0) return fol::Term::var(scope[pick(static_cast<int>(scope.size()))]);
                return fol::numeral(static_cast<fol::Natural>(pick(3)));
            case 1:
                return fol::numeral(static_cast<fol::Natural>(pick(3)));
            case 2:
                return fol::Term::succ(term(depth - 1, scope));
            case 3:
                return fol::Term::plus(term(depth - 1, scope), term(depth - 1, scope));
            default:
                return fol::Term::times(term(depth - 1, scope), term(depth - 1, scope));
        }
    }

private:
    fol::Formula formula(int depth, std::vector<std::string>& scope) {
        int choice = pick(depth <= 0 ? 2 : 7);
        switch (choice) {
            case 0:
                return fol::Formula::eq(term(1, scope), term(1, scope));
            case 1:
                return fol::Formula::gt(term(1, scope), term(1, scope));
            case 2:
                return fol::Formula::negation(formula(depth - 1, scope));
            case 3:
                return fol::Formula::disjunction(formula(depth - 1, scope), formula(depth - 1, scope));
            case 4:
                return fol::Formula::conjunction(formula(depth - 1, scope), formula(depth - 1, scope));
            default: {
                static const char* names[] = {"x", "y", "z"};
                std::string v = names[pick(3)];
                scope.push_back(v);
                fol::Formula body = formula(depth - 1, scope);
                scope.pop_back();
                return choice == 5 ? fol::Formula::forall(v, body) : fol::Formula::exists(v, body);
            }
        }
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    std::mt19937 rng_;
};

}  // namespace gentzen::testing
