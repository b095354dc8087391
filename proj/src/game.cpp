#include "gentzen/game.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace gentzen::game {

using fol::print;

std::string_view to_string(Player p) { return p == Player::Proponent ? "proponent" : "adversary"; }

namespace {

void push_unique(std::vector<Formula>& board, const Formula& f) {
    if (std::find(board.begin(), board.end(), f) == board.end()) board.push_back(f);
}

Formula instance(const Formula& q, Natural n) { return fol::substitute(q.sub(), q.var(), fol::numeral(n)); }

std::size_t answer_count(const Formula& f, Natural bound) {
    return f.kind() == Formula::Kind::And ? 2 : static_cast<std::size_t>(bound) + 1;
}

}  // namespace

GameState GameState::initial(std::vector<Formula> board, Natural bound) {
    GameState s;
    s.bound = bound;
    for (auto& f : board) {
        if (!fol::is_sentence(f)) throw std::invalid_argument("not a sentence: " + print(f));
        if (!fol::is_nnf(f)) throw std::invalid_argument("not in negation normal form: " + print(f));
        push_unique(s.board, f);
    }
    return s;
}

std::string to_string(const Move& m) {
    switch (m.kind) {
        case Move::Kind::OrLeft: return "or-left " + std::to_string(m.index);
        case Move::Kind::OrRight: return "or-right " + std::to_string(m.index);
        case Move::Kind::Witness: return "witness " + std::to_string(m.index) + " " + std::to_string(m.value);
        case Move::Kind::PointAt: return "point " + std::to_string(m.index);
        case Move::Kind::Answer: return "answer " + std::to_string(m.value);
    }
    return "?";
}

Move parse_move(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    in >> word;
    std::vector<std::uint64_t> args;
    std::string tok;
    while (in >> tok) {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size()) throw std::invalid_argument("bad move argument '" + tok + "'");
        args.push_back(v);
    }
    auto want = [&](std::size_t n) {
        if (args.size() != n) throw std::invalid_argument("move '" + word + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (word == "or-left") { want(1); return Move::or_left(args[0]); }
    if (word == "or-right") { want(1); return Move::or_right(args[0]); }
    if (word == "witness") { want(2); return Move::witness(args[0], args[1]); }
    if (word == "point") { want(1); return Move::point_at(args[0]); }
    if (word == "answer") { want(1); return Move::answer(args[0]); }
    throw std::invalid_argument("unknown move '" + word + "'");
}

std::optional<std::size_t> win_check(const GameState& s) {
    for (std::size_t i = 0; i < s.board.size(); ++i) {
        if (s.board[i].is_literal() && fol::eval_atomic(s.board[i])) return i;
    }
    return std::nullopt;
}

std::vector<Move> legal_moves(const GameState& s) {
    std::vector<Move> out;
    if (s.turn == Player::Adversary) {
        if (!s.pending) return out;
        std::size_t n = answer_count(s.board[*s.pending], s.bound);
        for (std::size_t a = 0; a < n; ++a) out.push_back(Move::answer(a));
        return out;
    }
    for (std::size_t i = 0; i < s.board.size(); ++i) {
        switch (s.board[i].kind()) {
            case Formula::Kind::Or:
                out.push_back(Move::or_left(i));
                out.push_back(Move::or_right(i));
                break;
            case Formula::Kind::Exists:
                for (Natural n = 0; n <= s.bound; ++n) out.push_back(Move::witness(i, n));
                break;
            case Formula::Kind::And:
            case Formula::Kind::Forall:
                out.push_back(Move::point_at(i));
                break;
            default:
                break;
        }
    }
    return out;
}

GameState apply_move(const GameState& s, const Move& m) {
    if (m.kind == Move::Kind::Answer) {
        if (s.turn != Player::Adversary || !s.pending) throw IllegalMove("no sentence is waiting for an answer");
        const Formula& f = s.board[*s.pending];
        if (m.value >= answer_count(f, s.bound)) {
            throw IllegalMove("answer " + std::to_string(m.value) + " is out of range for " + print(f));
        }
        Formula part = f.kind() == Formula::Kind::And ? (m.value == 0 ? f.left() : f.right()) : instance(f, m.value);
        GameState next = s;
        next.board.erase(next.board.begin() + static_cast<std::ptrdiff_t>(*s.pending));
        push_unique(next.board, part);
        next.turn = Player::Proponent;
        next.pending.reset();
        return next;
    }

    if (s.turn != Player::Proponent) throw IllegalMove("it is the adversary's turn");
    if (m.index >= s.board.size()) throw IllegalMove("no sentence at index " + std::to_string(m.index));
    const Formula& f = s.board[m.index];
    GameState next = s;
    switch (m.kind) {
        case Move::Kind::OrLeft:
        case Move::Kind::OrRight:
            if (f.kind() != Formula::Kind::Or) throw IllegalMove(print(f) + " is not a disjunction");
            push_unique(next.board, m.kind == Move::Kind::OrLeft ? f.left() : f.right());
            return next;
        case Move::Kind::Witness:
            if (f.kind() != Formula::Kind::Exists) throw IllegalMove(print(f) + " is not existential");
            if (m.value > s.bound) {
                throw IllegalMove("witness " + std::to_string(m.value) + " exceeds the bound " + std::to_string(s.bound));
            }
            push_unique(next.board, instance(f, m.value));
            return next;
        case Move::Kind::PointAt:
            if (f.kind() != Formula::Kind::And && f.kind() != Formula::Kind::Forall) {
                throw IllegalMove(print(f) + " is neither a conjunction nor universal");
            }
            next.turn = Player::Adversary;
            next.pending = m.index;
            return next;
        case Move::Kind::Answer:
            break;
    }
    throw IllegalMove("unreachable");
}

std::vector<Formula> components(const Formula& f, Natural bound) {
    switch (f.kind()) {
        case Formula::Kind::Or:
        case Formula::Kind::And:
            return {f.left(), f.right()};
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            std::vector<Formula> out;
            for (Natural n = 0; n <= bound; ++n) out.push_back(instance(f, n));
            return out;
        }
        default:
            return {};
    }
}

ord::List degree(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Or:
        case Formula::Kind::And:
            return ord::successor(ord::natural_sum(degree(f.left()), degree(f.right())));
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            return ord::omega_power(degree(f.sub()));
        default:
            return ord::List{};
    }
}

ord::List board_degree(const GameState& s) {
    ord::List sum;
    for (const auto& f : s.board) sum = ord::natural_sum(sum, degree(f));
    return sum;
}

std::size_t logical_depth(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Or:
        case Formula::Kind::And:
            return 1 + std::max(logical_depth(f.left()), logical_depth(f.right()));
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            return 1 + logical_depth(f.sub());
        default:
            return 0;
    }
}

std::size_t default_depth_budget(const GameState& s) {
    std::size_t d = 1;
    for (const auto& f : s.board) d = std::max(d, logical_depth(f));
    return d;
}

namespace {

struct MemoKey {
    std::vector<Formula> board;
    std::size_t depth;
    bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = k.depth * 0x9e3779b97f4a7c15ULL;
        for (const auto& f : k.board) h = (h ^ f.hash()) * 0x100000001b3ULL;
        return h;
    }
};

class Synthesizer {
public:
    StrategyTree solve(const GameState& s, std::size_t depth) {
        MemoKey key{s.board, depth};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        StrategyTree result = search(s, depth);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    StrategyTree search(const GameState& s, std::size_t depth) {
        if (auto w = win_check(s)) {
            auto leaf = std::make_shared<StrategyNode>();
            leaf->kind = StrategyNode::Kind::WinLeaf;
            leaf->state = s;
            leaf->index = *w;
            leaf->measure = board_degree(s);
            return leaf;
        }
        if (depth == 0) return nullptr;
        for (const Move& m : legal_moves(s)) {
            GameState next = apply_move(s, m);
            if (m.kind == Move::Kind::PointAt) {
                std::vector<StrategyTree> children;
                bool ok = true;
                for (const Move& a : legal_moves(next)) {
                    StrategyTree child = solve(apply_move(next, a), depth - 1);
                    if (!child) {
                        ok = false;
                        break;
                    }
                    children.push_back(std::move(child));
                }
                if (ok) return internal(s, StrategyNode::Kind::Adversary, m, std::move(children));
                continue;
            }
            if (next.board.size() == s.board.size()) continue;  // component already on the board
            if (StrategyTree child = solve(next, depth - 1)) {
                return internal(s, StrategyNode::Kind::Proponent, m, {std::move(child)});
            }
        }
        return nullptr;
    }

    static StrategyTree internal(const GameState& s, StrategyNode::Kind kind, const Move& m,
                                 std::vector<StrategyTree> children) {
        auto node = std::make_shared<StrategyNode>();
        node->kind = kind;
        node->state = s;
        node->move = m;
        node->index = m.index;
        ord::List top = board_degree(s);
        for (const auto& c : children) top = ord::max(top, c->measure);
        node->measure = ord::successor(top);
        node->children = std::move(children);
        return node;
    }

    std::unordered_map<MemoKey, StrategyTree, MemoHash> memo_;
};

}  // namespace

std::optional<StrategyTree> synthesize_reduction(const GameState& s, std::size_t depth_budget) {
    if (depth_budget == 0) throw std::invalid_argument("depth budget must be positive");
    if (s.turn != Player::Proponent) throw std::invalid_argument("synthesis starts on the proponent's turn");
    Synthesizer syn;
    StrategyTree t = syn.solve(s, depth_budget);
    if (!t) return std::nullopt;
    return t;
}

std::optional<std::string> verify_tree(const StrategyTree& tree) {
    const StrategyNode& n = *tree;
    if (n.state.turn != Player::Proponent) return "node is not on the proponent's turn";
    switch (n.kind) {
        case StrategyNode::Kind::WinLeaf: {
            if (n.index >= n.state.board.size()) return "win leaf index out of range";
            const Formula& f = n.state.board[n.index];
            if (!f.is_literal() || !fol::eval_atomic(f)) return "win leaf does not reference a true literal: " + print(f);
            return std::nullopt;
        }
        case StrategyNode::Kind::Proponent: {
            if (n.children.size() != 1) return "proponent node must have one child";
            if (n.move.kind == Move::Kind::PointAt || n.move.kind == Move::Kind::Answer) return "proponent node with a pointing move";
            GameState expected;
            try {
                expected = apply_move(n.state, n.move);
            } catch (const IllegalMove& e) {
                return std::string("illegal proponent move: ") + e.what();
            }
            if (!(n.children[0]->state == expected)) return "child board does not follow from " + to_string(n.move);
            break;
        }
        case StrategyNode::Kind::Adversary: {
            if (n.index >= n.state.board.size()) return "pointed index out of range";
            const Formula& f = n.state.board[n.index];
            if (f.kind() != Formula::Kind::And && f.kind() != Formula::Kind::Forall) return "pointed sentence is not & or forall";
            if (n.children.size() != answer_count(f, n.state.bound)) return "adversary node is missing answers";
            GameState pointed = apply_move(n.state, Move::point_at(n.index));
            for (std::size_t a = 0; a < n.children.size(); ++a) {
                if (!(n.children[a]->state == apply_move(pointed, Move::answer(a)))) {
                    return "child " + std::to_string(a) + " does not follow from the answer";
                }
            }
            break;
        }
    }
    for (const auto& c : n.children) {
        if (!ord::less(c->measure, n.measure)) return "measure does not decrease from parent to child";
        if (auto err = verify_tree(c)) return err;
    }
    return std::nullopt;
}

std::size_t tree_size(const StrategyTree& tree) {
    std::size_t n = 1;
    for (const auto& c : tree->children) n += tree_size(c);
    return n;
}

std::optional<Move> root_move(const StrategyTree& tree) {
    switch (tree->kind) {
        case StrategyNode::Kind::WinLeaf: return std::nullopt;
        case StrategyNode::Kind::Proponent: return tree->move;
        case StrategyNode::Kind::Adversary: return Move::point_at(tree->index);
    }
    return std::nullopt;
}

std::string_view to_string(Trace::Outcome o) {
    switch (o) {
        case Trace::Outcome::ProponentWin: return "win";
        case Trace::Outcome::NoLegalMove: return "no-legal-move";
        case Trace::Outcome::BudgetExhausted: return "budget-exhausted";
        case Trace::Outcome::Forfeit: return "forfeit";
    }
    return "?";
}

Trace play(const GameState& s, const Strategy& proponent, const Strategy& adversary, std::size_t step_budget) {
    Trace t;
    t.bound = s.bound;
    t.states.push_back(s);
    while (true) {
        const GameState& cur = t.states.back();
        if (auto w = win_check(cur)) {
            t.outcome = Trace::Outcome::ProponentWin;
            t.win_index = w;
            return t;
        }
        if (legal_moves(cur).empty()) {
            t.outcome = Trace::Outcome::NoLegalMove;
            t.culprit = cur.turn;
            return t;
        }
        if (t.moves.size() >= step_budget) {
            t.outcome = Trace::Outcome::BudgetExhausted;
            return t;
        }
        const Strategy& who = cur.turn == Player::Proponent ? proponent : adversary;
        std::optional<Move> m = who(cur);
        if (!m) {
            t.outcome = Trace::Outcome::Forfeit;
            t.culprit = cur.turn;
            t.reason = "resigned";
            return t;
        }
        GameState next;
        try {
            next = apply_move(cur, *m);
        } catch (const IllegalMove& e) {
            t.outcome = Trace::Outcome::Forfeit;
            t.culprit = cur.turn;
            t.reason = e.what();
            return t;
        }
        t.moves.push_back(*m);
        t.states.push_back(std::move(next));
    }
}

namespace {

void collect_lines(const StrategyTree& node, std::vector<Natural>& prefix, std::vector<std::vector<Natural>>& out) {
    switch (node->kind) {
        case StrategyNode::Kind::WinLeaf:
            out.push_back(prefix);
            return;
        case StrategyNode::Kind::Proponent:
            collect_lines(node->children[0], prefix, out);
            return;
        case StrategyNode::Kind::Adversary:
            for (std::size_t a = 0; a < node->children.size(); ++a) {
                prefix.push_back(a);
                collect_lines(node->children[a], prefix, out);
                prefix.pop_back();
            }
            return;
    }
}

std::size_t line_length(const StrategyTree& node) {
    std::size_t h = 0;
    for (const auto& c : node->children) h = std::max(h, line_length(c));
    switch (node->kind) {
        case StrategyNode::Kind::Adversary: return h + 2;
        case StrategyNode::Kind::Proponent: return h + 1;
        default: return h;
    }
}

}  // namespace

ReplayReport replay(const StrategyTree& tree) {
    std::vector<std::vector<Natural>> lines;
    std::vector<Natural> prefix;
    collect_lines(tree, prefix, lines);

    const std::size_t budget = line_length(tree);

    ReplayReport report;
    for (const auto& line : lines) {
        StrategyTree cursor = tree;
        std::size_t next_answer = 0;
        Strategy proponent = [&](const GameState&) -> std::optional<Move> {
            auto m = root_move(cursor);
            if (m && cursor->kind == StrategyNode::Kind::Proponent) cursor = cursor->children[0];
            return m;
        };
        Strategy adversary = [&](const GameState&) -> std::optional<Move> {
            if (next_answer >= line.size()) return std::nullopt;
            Natural a = line[next_answer++];
            if (a < cursor->children.size()) cursor = cursor->children[a];
            return Move::answer(a);
        };
        Trace t = play(tree->state, proponent, adversary, budget);
        ++report.lines;
        if (t.outcome == Trace::Outcome::ProponentWin) {
            ++report.wins;
        } else {
            report.failures.push_back(std::move(t));
        }
    }
    return report;
}

Move adversary_reply(const GameState& s) {
    std::vector<Move> answers = legal_moves(s);
    if (s.turn != Player::Adversary || answers.empty()) throw std::invalid_argument("the adversary has nothing to answer");
    std::optional<Move> best;
    ord::List best_measure;
    for (const Move& a : answers) {
        GameState next = apply_move(s, a);
        auto tree = synthesize_reduction(next, default_depth_budget(next));
        if (!tree) return a;
        if (!best || ord::less(best_measure, (*tree)->measure)) {
            best = a;
            best_measure = (*tree)->measure;
        }
    }
    return *best;
}

}  // namespace gentzen::game
