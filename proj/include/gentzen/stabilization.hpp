#pragma once

// Running weakly decreasing ordinal sequence generators and watching them
// settle down.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentzen/ordinal.hpp"

namespace gentzen::seq {

// Programs encode their state however they like; two states are the same
// state exactly when the strings are equal.
using State = std::string;

struct Emission {
    ord::List output;
    State next;
};

struct SequenceProgram {
    std::string name;
    State initial_state;
    std::function<Emission(const State&)> step;  // deterministic
    std::optional<std::size_t> state_space_bound;
};

enum class CertificateKind {
    StateCycle,    // a state was revisited and the output is constant on the cycle
    BudgetWindow,  // the last `window` outputs agreed; heuristic only
};

std::string_view to_string(CertificateKind k);

struct Stabilization {
    std::size_t index;  // 1-based i0 with a_i = a_i0 for all i >= i0
    CertificateKind kind;
};

struct DescentReport {
    std::size_t inspected = 0;
    std::size_t strict_decreases = 0;
    std::optional<std::size_t> violation;  // 1-based i with a_i < a_{i+1}
    std::optional<Stabilization> stabilized_at;
    ord::List final_value;

    bool certified() const {
        return stabilized_at && stabilized_at->kind == CertificateKind::StateCycle;
    }
};

struct MonitorOptions {
    std::size_t window = 8;
};

// Runs at most `budget` steps.  Throws std::invalid_argument when budget is 0.
DescentReport monitor(const SequenceProgram& program, std::size_t budget, MonitorOptions options = {});

// Starts at `start`; each step drops a trailing 1 if there is one, and
// otherwise replaces the last constituent c by `rule_seed` copies of c with
// its own last constituent removed.  Reaches [] and stays there.
SequenceProgram canonical_descent(const ord::List& start, std::size_t rule_seed);

// Emits the given ordinals in order, then repeats the last one forever.
SequenceProgram listed(std::vector<ord::List> values);

// Textual program specs used on the command line:
//   descent:<ordinal>:<seed>   canonical_descent
//   list:<o1>;<o2>;...         listed
//   countdown:<n>              n, n-1, ..., 0, 0, ...
SequenceProgram parse_program_spec(std::string_view spec);

// One line: key=value pairs separated by spaces.
std::string to_record(const DescentReport& report);

}  // namespace gentzen::seq
