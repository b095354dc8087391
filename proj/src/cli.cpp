#include "gentzen/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gentzen/arith.hpp"
#include "gentzen/game.hpp"
#include "gentzen/ordinal.hpp"
#include "gentzen/proof.hpp"
#include "gentzen/report.hpp"
#include "gentzen/server.hpp"
#include "gentzen/stabilization.hpp"

namespace gentzen::cli {

namespace {

using report::json;

// Raised inside a command to leave with a status and a message.
struct Exit {
    int status;
    std::string message;
};

// Option storage for one command line.
struct Options {
    std::string a, b;
    std::string program;
    std::size_t budget = 1000, window = 8;
    std::string text;
    fol::Natural bound = 0;
    std::string sentence;
    std::size_t depth = 0, steps = 64;
    std::string host = "127.0.0.1", static_dir;
    int port = 8080;
    std::vector<std::string> extras;
    std::string metric = "symbols", file, target;
    std::size_t max_length = 0, ceiling = 0;
    bool minimize = false;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
    std::string command;
    json args = json::object();
    Options o;

    // Prints the human line, or the document when --json is set.
    void emit(const std::string& kind, const json& payload, const std::string& text) const {
        if (as_json) {
            out << report::trace_document(command, args, kind, payload).dump(2) << "\n";
        } else {
            out << text;
            if (!text.empty() && text.back() != '\n') out << "\n";
        }
    }
};

ord::List ordinal_arg(const std::string& text) {
    try {
        return ord::parse_ordinal(text);
    } catch (const ord::ParseError& e) {
        throw Exit{kUsage, "cannot parse ordinal '" + text + "': " + e.what()};
    }
}

fol::Formula formula_arg(const std::string& text) {
    try {
        return fol::parse_formula(text);
    } catch (const fol::SyntaxError& e) {
        throw Exit{kUsage, "cannot parse formula '" + text + "': " + e.what()};
    }
}

fol::Formula sentence_arg(const std::string& text) {
    fol::Formula f = formula_arg(text);
    if (!fol::is_sentence(f)) throw Exit{kUsage, "'" + text + "' has free variables"};
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Exit{kUsage, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

proof::CalculusProfile profile_from(const std::vector<std::string>& extras, const std::string& metric,
                                    std::optional<std::size_t> ceiling = std::nullopt) {
    proof::CalculusProfile p;
    for (const auto& e : extras) p.extra_axioms.push_back(formula_arg(e));
    if (metric == "steps") {
        p.metric = proof::LengthMetric::Steps;
    } else if (metric != "symbols") {
        throw Exit{kUsage, "unknown metric '" + metric + "' (symbols or steps)"};
    }
    p.ceiling = ceiling;
    return p;
}

proof::Proof proof_file(const std::string& path) {
    try {
        return proof::parse_proof(read_file(path));
    } catch (const proof::ProofFormatError& e) {
        throw Exit{kUsage, path + ": " + e.what()};
    }
}

// ---- ordinal ----

void add_ordinal(CLI::App& app, Context& ctx) {
    auto* cmd = app.add_subcommand("ordinal", "Ordinals below epsilon_0 in bracket notation");
    cmd->require_subcommand(1);

    auto* compare = cmd->add_subcommand("compare", "Compare two ordinals: LT, EQ or GT");
    compare->add_option("a", ctx.o.a)->required();
    compare->add_option("b", ctx.o.b)->required();
    compare->callback([&] {
        ctx.args = {{"a", ctx.o.a}, {"b", ctx.o.b}};
        auto x = ordinal_arg(ctx.o.a), y = ordinal_arg(ctx.o.b);
        for (const auto* o : {&x, &y}) {
            if (!ord::is_ordinal(*o)) throw Exit{kUsage, ord::render_brackets(*o) + " is not an ordinal"};
        }
        std::string r(ord::to_string(ord::compare(x, y)));
        ctx.emit("ordinal-compare", {{"result", r}}, r);
    });

    auto* validate = cmd->add_subcommand("validate", "Check that a list is an ordinal");
    validate->add_option("a", ctx.o.a)->required();
    validate->callback([&] {
        ctx.args = {{"a", ctx.o.a}};
        bool ok = ord::is_ordinal(ordinal_arg(ctx.o.a));
        ctx.emit("ordinal-validate", {{"valid", ok}}, ok ? "valid" : "invalid");
        if (!ok) throw Exit{kNegative, ""};
    });

    auto* cnf = cmd->add_subcommand("cnf", "Cantor normal form");
    cnf->add_option("a", ctx.o.a)->required();
    cnf->callback([&] {
        ctx.args = {{"a", ctx.o.a}};
        auto x = ordinal_arg(ctx.o.a);
        if (!ord::is_ordinal(x)) throw Exit{kUsage, ctx.o.a + " is not an ordinal"};
        std::string r = ord::render_cnf(x);
        ctx.emit("ordinal-cnf", {{"cnf", r}}, r);
    });

    auto* height = cmd->add_subcommand("height", "Opening brackets before the first closing one");
    height->add_option("a", ctx.o.a)->required();
    height->callback([&] {
        ctx.args = {{"a", ctx.o.a}};
        auto h = ord::height(ordinal_arg(ctx.o.a));
        ctx.emit("ordinal-height", {{"height", h}}, std::to_string(h));
    });
}

// ---- seq ----

void add_seq(CLI::App& app, Context& ctx) {
    auto* cmd = app.add_subcommand("seq", "Weakly decreasing ordinal sequences");
    cmd->require_subcommand(1);
    auto* monitor = cmd->add_subcommand("monitor", "Run a sequence program and watch it stabilize");
    monitor->add_option("--program", ctx.o.program, "descent:<ordinal>:<seed>, list:<o1>;<o2>;..., countdown:<n>")->required();
    monitor->add_option("--budget", ctx.o.budget, "Steps to run")->required();
    monitor->add_option("--window", ctx.o.window, "Agreeing outputs for the budget-window certificate");
    monitor->callback([&] {
        ctx.args = {{"program", ctx.o.program}, {"budget", ctx.o.budget}, {"window", ctx.o.window}};
        seq::SequenceProgram p;
        try {
            p = seq::parse_program_spec(ctx.o.program);
        } catch (const std::exception& e) {
            throw Exit{kUsage, e.what()};
        }
        if (ctx.o.budget == 0) throw Exit{kUsage, "--budget must be positive"};
        auto r = seq::monitor(p, ctx.o.budget, {ctx.o.window});
        ctx.emit("descent-report", report::to_json(r), seq::to_record(r));
        if (r.violation) throw Exit{kNegative, ""};
    });
}

// ---- formula ----

void add_formula(CLI::App& app, Context& ctx) {
    auto* cmd = app.add_subcommand("formula", "Formulas of first-order arithmetic");
    cmd->require_subcommand(1);

    auto* parse = cmd->add_subcommand("parse", "Print the canonical form");
    parse->add_option("formula", ctx.o.text)->required();
    parse->callback([&] {
        ctx.args = {{"formula", ctx.o.text}};
        auto f = formula_arg(ctx.o.text);
        std::string printed = fol::print(f);
        json free = json::array();
        for (const auto& v : fol::free_vars(f)) free.push_back(v);
        ctx.emit("formula", {{"printed", printed}, {"size", f.size()}, {"free_vars", free}, {"sentence", fol::is_sentence(f)}},
                 printed);
    });

    auto* nnf = cmd->add_subcommand("nnf", "Negation normal form");
    nnf->add_option("formula", ctx.o.text)->required();
    nnf->callback([&] {
        ctx.args = {{"formula", ctx.o.text}};
        std::string printed = fol::print(fol::nnf(formula_arg(ctx.o.text)));
        ctx.emit("formula", {{"nnf", printed}}, printed);
    });

    auto* eval = cmd->add_subcommand("eval", "Truth with quantifiers over 0..bound");
    eval->add_option("formula", ctx.o.text)->required();
    eval->add_option("--bound", ctx.o.bound)->required();
    eval->callback([&] {
        ctx.args = {{"formula", ctx.o.text}, {"bound", ctx.o.bound}};
        auto t = fol::eval_bounded(sentence_arg(ctx.o.text), ctx.o.bound);
        std::string r = fol::to_string(t);
        ctx.emit("formula-eval", {{"verdict", r}}, r);
    });
}

// ---- game ----

void add_game(CLI::App& app, Context& ctx) {
    auto* cmd = app.add_subcommand("game", "The reduction game");
    cmd->require_subcommand(1);

    auto initial = [&] {
        ctx.args = {{"sentence", ctx.o.sentence}, {"bound", ctx.o.bound}};
        try {
            return game::GameState::initial({fol::nnf(sentence_arg(ctx.o.sentence))}, ctx.o.bound);
        } catch (const std::invalid_argument& e) {
            throw Exit{kUsage, e.what()};
        }
    };

    auto* synth = cmd->add_subcommand("synth", "Search for a reduction");
    synth->add_option("--sentence", ctx.o.sentence)->required();
    synth->add_option("--bound", ctx.o.bound)->required();
    synth->add_option("--depth", ctx.o.depth, "Proponent move budget (default: the logical depth)");
    synth->callback([&ctx, initial] {
        auto s = initial();
        std::size_t budget = ctx.o.depth ? ctx.o.depth : game::default_depth_budget(s);
        ctx.args["depth"] = budget;
        auto tree = game::synthesize_reduction(s, budget);
        if (!tree) {
            ctx.emit("game-synth", {{"reduction", false}}, "NO-REDUCTION");
            throw Exit{kNegative, ""};
        }
        auto first = game::root_move(*tree);
        std::string text = "REDUCTION measure=" + ord::render_cnf((*tree)->measure) +
                           " nodes=" + std::to_string(game::tree_size(*tree)) +
                           " first=" + (first ? game::to_string(*first) : std::string("claim-win"));
        ctx.emit("game-synth", {{"reduction", true}, {"tree", report::to_json(*tree)}}, text);
    });

    auto* play = cmd->add_subcommand("play", "Engine proponent against the engine adversary");
    play->add_option("--sentence", ctx.o.sentence)->required();
    play->add_option("--bound", ctx.o.bound)->required();
    play->add_option("--steps", ctx.o.steps, "Move budget");
    play->callback([&ctx, initial] {
        auto s = initial();
        ctx.args["steps"] = ctx.o.steps;
        game::Strategy proponent = [](const game::GameState& st) -> std::optional<game::Move> {
            auto tree = game::synthesize_reduction(st, game::default_depth_budget(st));
            if (tree) return game::root_move(*tree);
            auto moves = game::legal_moves(st);
            if (moves.empty()) return std::nullopt;
            return moves.front();
        };
        game::Strategy adversary = [](const game::GameState& st) -> std::optional<game::Move> {
            return game::adversary_reply(st);
        };
        auto t = game::play(s, proponent, adversary, ctx.o.steps);
        std::ostringstream text;
        for (std::size_t i = 0; i < t.moves.size(); ++i) {
            const auto& before = t.states[i];
            text << (i + 1) << ". " << game::to_string(before.turn) << " " << game::to_string(t.moves[i]) << "\n";
        }
        text << "outcome=" << game::to_string(t.outcome);
        if (t.win_index) text << " win_index=" << *t.win_index;
        if (t.culprit) text << " culprit=" << game::to_string(*t.culprit);
        if (!t.reason.empty()) text << " reason=\"" << t.reason << "\"";
        ctx.emit("game-trace", report::to_json(t), text.str());
        if (t.outcome != game::Trace::Outcome::ProponentWin) throw Exit{kNegative, ""};
    });

    auto* serve = cmd->add_subcommand("serve", "Serve the game API (and the UI, with --static)");
    serve->add_option("--host", ctx.o.host);
    serve->add_option("--port", ctx.o.port)->check(CLI::Range(1, 65535));
    serve->add_option("--static", ctx.o.static_dir, "Directory of the built UI");
    serve->callback([&] {
        service::GameService games;
        std::optional<std::string> dir;
        if (!ctx.o.static_dir.empty()) dir = ctx.o.static_dir;
        ctx.err << "serving on http://" << ctx.o.host << ":" << ctx.o.port << "\n";
        if (!service::serve(games, ctx.o.host, ctx.o.port, dir)) throw Exit{kServer, "cannot listen on " + ctx.o.host + ":" + std::to_string(ctx.o.port)};
    });
}

// ---- proof ----

void add_proof(CLI::App& app, Context& ctx) {
    auto* cmd = app.add_subcommand("proof", "Proofs in Peano arithmetic");
    cmd->require_subcommand(1);

    auto* check = cmd->add_subcommand("check", "Check a proof file");
    check->add_option("file", ctx.o.file)->required();
    check->add_option("--extra", ctx.o.extras, "Additional axiom, cited as 'extra k'");
    check->add_option("--metric", ctx.o.metric, "symbols or steps");
    check->callback([&] {
        ctx.args = {{"file", ctx.o.file}, {"extra", ctx.o.extras}, {"metric", ctx.o.metric}};
        auto profile = profile_from(ctx.o.extras, ctx.o.metric);
        report::ProofCheckReport r{proof_file(ctx.o.file), std::nullopt, profile.metric};
        r.error = proof::check_proof(r.proof, profile);
        std::string text;
        if (r.error) {
            text = "FAIL step " + std::to_string(r.error->step) + ": " + r.error->reason;
        } else {
            text = "OK steps=" + std::to_string(r.proof.steps.size()) +
                   " length=" + std::to_string(proof::proof_length(r.proof, profile.metric)) +
                   " conclusion=" + fol::print(r.proof.conclusion());
        }
        ctx.emit("proof-check", report::to_json(r), text);
        if (r.error) throw Exit{kNegative, ""};
    });

    auto* search = cmd->add_subcommand("search", "Look for a proof of a contradiction");
    search->add_option("--max-length", ctx.o.max_length, "Only proofs shorter than this")->required();
    search->add_option("--extra", ctx.o.extras, "Additional axiom, cited as 'extra k'");
    search->add_option("--metric", ctx.o.metric, "symbols or steps");
    search->add_option("--ceiling", ctx.o.ceiling, "Override the refusal ceiling");
    search->add_flag("--minimize", ctx.o.minimize, "Return the shortest proof");
    search->callback([&] {
        ctx.args = {{"max_length", ctx.o.max_length}, {"extra", ctx.o.extras}, {"metric", ctx.o.metric}, {"minimize", ctx.o.minimize}};
        std::optional<std::size_t> c;
        if (ctx.o.ceiling) c = ctx.o.ceiling;
        auto profile = profile_from(ctx.o.extras, ctx.o.metric, c);
        report::SearchReport r;
        r.max_length = ctx.o.max_length;
        r.ceiling = proof::search_ceiling(profile);
        r.metric = profile.metric;
        try {
            r.found = proof::search_contradiction(ctx.o.max_length, profile, {ctx.o.minimize}, &r.stats);
        } catch (const proof::SearchRefused& e) {
            if (ctx.as_json) {
                ctx.emit("search-refused", {{"max_length", ctx.o.max_length}, {"ceiling", e.ceiling()}}, "");
            }
            throw Exit{kRefused, "REFUSED ceiling=" + std::to_string(e.ceiling()) + ": " + e.what()};
        }
        std::string text;
        if (r.found) {
            text = "CONTRADICTION length=" + std::to_string(proof::proof_length(*r.found, profile.metric)) + "\n" +
                   proof::print_proof(*r.found);
        } else {
            text = "CON-VERIFIED length<" + std::to_string(ctx.o.max_length);
        }
        ctx.emit("search-report", report::to_json(r), text);
        if (r.found) throw Exit{kNegative, ""};
    });

    auto* explode = cmd->add_subcommand("explode", "Derive a sentence from a contradiction proof");
    explode->add_option("file", ctx.o.file)->required();
    explode->add_option("--target", ctx.o.target)->required();
    explode->add_option("--extra", ctx.o.extras, "Additional axiom, cited as 'extra k'");
    explode->callback([&] {
        ctx.args = {{"file", ctx.o.file}, {"target", ctx.o.target}, {"extra", ctx.o.extras}};
        auto profile = profile_from(ctx.o.extras, "symbols");
        proof::Proof out;
        try {
            out = proof::explode(proof_file(ctx.o.file), sentence_arg(ctx.o.target), profile);
        } catch (const std::invalid_argument& e) {
            throw Exit{kUsage, e.what()};
        }
        ctx.emit("proof", report::to_json(out), proof::print_proof(out));
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ordinals, the reduction game and proofs in Peano arithmetic", "gentzen"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err, false, {}, json::object(), {}};
    for (const auto& a : args) {
        if (a.starts_with("-")) continue;
        if (!ctx.command.empty()) {
            ctx.command += " " + a;
            break;
        }
        ctx.command = a;
    }
    app.add_flag("--json", ctx.as_json, "Write a JSON trace document");
    add_ordinal(app, ctx);
    add_seq(app, ctx);
    add_formula(app, ctx);
    add_game(app, ctx);
    add_proof(app, ctx);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const Exit& e) {
        if (!e.message.empty()) err << e.message << "\n";
        return e.status;
    }
    return kOk;
}

}  // namespace gentzen::cli
