#pragma once

// The reduction game on a board of closed NNF sentences.
//
// The proponent moves on disjunctions and existentials by adding a component
// (the sentence stays on the board), and points at conjunctions and
// universals, which the adversary answers by replacing the sentence with a
// component of its choice.  The proponent wins once a true literal is on the
// board.  Numeral choices on both sides range over 0..bound.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentzen/arith.hpp"
#include "gentzen/ordinal.hpp"
#include "gentzen/syntax.hpp"

namespace gentzen::game {

using fol::Formula;
using fol::Natural;

enum class Player { Proponent, Adversary };

std::string_view to_string(Player p);

struct GameState {
    std::vector<Formula> board;
    Natural bound = 0;
    Player turn = Player::Proponent;
    std::optional<std::size_t> pending;

    // Checks that every sentence is closed and in NNF and removes duplicates.
    // Throws std::invalid_argument otherwise.
    static GameState initial(std::vector<Formula> board, Natural bound);

    friend bool operator==(const GameState&, const GameState&) = default;
};

struct Move {
    enum class Kind { OrLeft, OrRight, Witness, PointAt, Answer };
    Kind kind = Kind::PointAt;
    std::size_t index = 0;  // board index; unused for Answer
    Natural value = 0;      // witness for Witness; for Answer, 0/1 on a conjunction or the numeral on a universal

    static Move or_left(std::size_t i) { return {Kind::OrLeft, i, 0}; }
    static Move or_right(std::size_t i) { return {Kind::OrRight, i, 0}; }
    static Move witness(std::size_t i, Natural n) { return {Kind::Witness, i, n}; }
    static Move point_at(std::size_t i) { return {Kind::PointAt, i, 0}; }
    static Move answer(Natural choice) { return {Kind::Answer, 0, choice}; }

    friend bool operator==(const Move&, const Move&) = default;
};

// "or-left 0", "or-right 2", "witness 0 3", "point 1", "answer 2".
std::string to_string(const Move& m);
Move parse_move(std::string_view text);

class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::optional<std::size_t> win_check(const GameState& s);
std::vector<Move> legal_moves(const GameState& s);

// Throws IllegalMove with the reason when m is not legal in s.
GameState apply_move(const GameState& s, const Move& m);

// Components of a sentence: both sides of a binary connective, the numeral
// instances 0..bound of a quantifier body; empty for literals.
std::vector<Formula> components(const Formula& f, Natural bound);

// Literal -> 0; binary -> successor of the natural sum; quantifier -> w^body.
ord::List degree(const Formula& f);
ord::List board_degree(const GameState& s);

// Proponent moves a true sentence needs before a true literal shows up.
std::size_t logical_depth(const Formula& f);
std::size_t default_depth_budget(const GameState& s);

struct StrategyNode;
using StrategyTree = std::shared_ptr<const StrategyNode>;

struct StrategyNode {
    enum class Kind { WinLeaf, Proponent, Adversary };
    Kind kind;
    GameState state;  // always the proponent's turn
    std::size_t index = 0;  // WinLeaf: the true literal; Adversary: the pointed sentence
    Move move;              // Proponent
    std::vector<StrategyTree> children;  // one for Proponent, one per answer for Adversary
    ord::List measure;
};

// Exhaustive minimax within depth_budget proponent moves.  Throws
// std::invalid_argument for a zero budget or a state that is not the
// proponent's turn.
std::optional<StrategyTree> synthesize_reduction(const GameState& s, std::size_t depth_budget);

// Empty when the tree satisfies every structural invariant, otherwise the
// first violation found.
std::optional<std::string> verify_tree(const StrategyTree& tree);

std::size_t tree_size(const StrategyTree& tree);

// The proponent's first move in the tree, or nullopt for a win leaf.
std::optional<Move> root_move(const StrategyTree& tree);

// Strategies return nullopt to resign; an illegal move forfeits.
using Strategy = std::function<std::optional<Move>(const GameState&)>;

struct Trace {
    enum class Outcome { ProponentWin, NoLegalMove, BudgetExhausted, Forfeit };
    Natural bound = 0;
    std::vector<Move> moves;
    std::vector<GameState> states;  // states[0] is the start; one more per move
    Outcome outcome = Outcome::NoLegalMove;
    std::optional<Player> culprit;  // NoLegalMove and Forfeit
    std::optional<std::size_t> win_index;
    std::string reason;
};

std::string_view to_string(Trace::Outcome o);

Trace play(const GameState& s, const Strategy& proponent, const Strategy& adversary, std::size_t step_budget);

struct ReplayReport {
    std::size_t lines = 0;
    std::size_t wins = 0;
    std::vector<Trace> failures;
};

// Plays the tree as the proponent against every sequence of adversary
// answers.
ReplayReport replay(const StrategyTree& tree);

// An answer for the adversary that leaves the proponent without a reduction
// when one exists, otherwise the answer with the largest remaining measure.
Move adversary_reply(const GameState& s);

}  // namespace gentzen::game
