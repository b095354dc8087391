#pragma once

// Hilbert-style proofs for PA: logical axiom schemas, the PA axioms, the
// induction schema, numerical calculation, modus ponens and generalization.
// docs/axioms.md lists every schema; docs/proof_format.md the file format.

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gentzen/syntax.hpp"

namespace gentzen::proof {

using fol::Formula;

enum class Schema {
    L1, L2, L3, DN, ExFalso, AndL, AndR, AndI, OrL, OrR, OrE,
    Q1, Q2, Q3, Q4,
    E1, E2, E3, E4, E5, E6, E7, E8, E9,
};

inline constexpr std::size_t kSchemaCount = 24;

std::string_view to_string(Schema s);
std::optional<Schema> parse_schema(std::string_view name);
const std::vector<Schema>& all_schemas();

// True when f is an instance of the schema, side conditions included.
bool is_instance(Schema s, const Formula& f);

struct Justification {
    enum class Kind { Axiom, PA, Extra, Induction, Calc, MP, Gen };
    Kind kind = Kind::Calc;
    Schema schema = Schema::L1;  // Axiom
    std::size_t a = 0;           // PA / Extra: 1-based axiom number; MP: minor premise; Gen: premise
    std::size_t b = 0;           // MP: the implication
    std::string var;             // Gen

    static Justification axiom(Schema s) { return {Kind::Axiom, s, 0, 0, {}}; }
    static Justification pa(std::size_t k) { return {Kind::PA, Schema::L1, k, 0, {}}; }
    static Justification extra(std::size_t k) { return {Kind::Extra, Schema::L1, k, 0, {}}; }
    static Justification induction() { return {Kind::Induction, Schema::L1, 0, 0, {}}; }
    static Justification calc() { return {Kind::Calc, Schema::L1, 0, 0, {}}; }
    static Justification mp(std::size_t i, std::size_t j) { return {Kind::MP, Schema::L1, i, j, {}}; }
    static Justification gen(std::size_t i, std::string v) { return {Kind::Gen, Schema::L1, i, 0, std::move(v)}; }

    friend bool operator==(const Justification&, const Justification&) = default;
};

std::string to_string(const Justification& j);

struct Step {
    Formula formula;
    Justification why;

    friend bool operator==(const Step&, const Step&) = default;
};

struct Proof {
    std::vector<Step> steps;

    const Formula& conclusion() const { return steps.back().formula; }
    bool empty() const { return steps.empty(); }

    friend bool operator==(const Proof&, const Proof&) = default;
};

enum class LengthMetric { Symbols, Steps };

struct CalculusProfile {
    // Additional axioms, cited as `extra k`.  Test harnesses use these to
    // make the system inconsistent on purpose.
    std::vector<Formula> extra_axioms;
    LengthMetric metric = LengthMetric::Symbols;
    // Replaces the built-in refusal ceiling of search_contradiction.
    std::optional<std::size_t> ceiling;
};

struct CheckError {
    std::size_t step;  // 1-based
    std::string reason;
};

// Empty on success.  An empty proof is rejected.
std::optional<CheckError> check_proof(const Proof& p, const CalculusProfile& profile = {});

std::size_t proof_length(const Proof& p, LengthMetric metric = LengthMetric::Symbols);

// Matches P & !P.
bool is_contradiction(const Formula& f);

// Throws std::invalid_argument unless p checks and concludes a contradiction.
Proof explode(const Proof& p, const Formula& target, const CalculusProfile& profile = {});

// One step per line: `<n>. <formula> ; <justification>`.  Blank lines and
// lines starting with '#' are skipped.
std::string print_proof(const Proof& p);
Proof parse_proof(std::string_view text);

class ProofFormatError : public std::runtime_error {
public:
    ProofFormatError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct SearchStats {
    std::size_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

// Largest max_length accepted for a profile.
std::size_t search_ceiling(const CalculusProfile& profile);

class SearchRefused : public std::invalid_argument {
public:
    SearchRefused(const std::string& what, std::size_t ceiling) : std::invalid_argument(what), ceiling_(ceiling) {}
    std::size_t ceiling() const { return ceiling_; }

private:
    std::size_t ceiling_;
};

struct SearchOptions {
    // Keep searching below the length of each proof found and return the
    // shortest.
    bool minimize = false;
};

// Exhaustive search for a checkable proof of a contradiction with
// proof_length < max_length.  Absent means no such proof exists.  Throws
// SearchRefused above the ceiling.
std::optional<Proof> search_contradiction(std::size_t max_length, const CalculusProfile& profile = {},
                                          const SearchOptions& options = {}, SearchStats* stats = nullptr);

// Counts every checkable proof (formula and justification per step) with
// symbol length < max_length whose variables come from `variables`.
std::size_t count_proofs(std::size_t max_length, const std::vector<std::string>& variables,
                         const CalculusProfile& profile = {});

}  // namespace gentzen::proof
