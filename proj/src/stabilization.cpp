#include "gentzen/stabilization.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace gentzen::seq {

std::string_view to_string(CertificateKind k) {
    return k == CertificateKind::StateCycle ? "state-cycle" : "budget-window";
}

DescentReport monitor(const SequenceProgram& program, std::size_t budget, MonitorOptions options) {
    if (budget == 0) throw std::invalid_argument("monitor: budget must be at least 1");

    DescentReport report;
    std::vector<ord::List> outputs;  // outputs[i - 1] is a_i
    std::unordered_map<State, std::size_t> first_seen;
    State state = program.initial_state;

    for (std::size_t i = 1; i <= budget; ++i) {
        if (auto it = first_seen.find(state); it != first_seen.end()) {
            // a_i = a_j from here on, so the tail cycles through a_j .. a_{i-1}.
            std::size_t j = it->second;
            const ord::List& head = outputs[j - 1];
            if (ord::less(outputs.back(), head)) {
                report.violation = i - 1;
                break;
            }
            bool constant = true;
            for (std::size_t k = j; k < i; ++k) constant = constant && outputs[k - 1] == head;
            if (constant) {
                std::size_t i0 = j;
                while (i0 > 1 && outputs[i0 - 2] == head) --i0;
                report.stabilized_at = Stabilization{i0, CertificateKind::StateCycle};
            }
            break;
        }
        first_seen.emplace(state, i);
        Emission e = program.step(state);
        if (!outputs.empty()) {
            ord::Ordering3 c = ord::compare(outputs.back(), e.output);
            if (c == ord::Ordering3::Less) {
                outputs.push_back(std::move(e.output));
                report.inspected = i;
                report.violation = i - 1;
                break;
            }
            if (c == ord::Ordering3::Greater) ++report.strict_decreases;
        }
        outputs.push_back(std::move(e.output));
        report.inspected = i;
        state = std::move(e.next);
    }

    if (!report.violation && !report.stabilized_at && options.window > 0 &&
        outputs.size() >= options.window) {
        const ord::List& last = outputs.back();
        std::size_t run = 0;
        while (run < outputs.size() && outputs[outputs.size() - 1 - run] == last) ++run;
        if (run >= options.window) {
            report.stabilized_at = Stabilization{outputs.size() - run + 1, CertificateKind::BudgetWindow};
        }
    }
    if (!outputs.empty()) report.final_value = outputs.back();
    return report;
}

namespace {

ord::List descend(const ord::List& a, std::size_t seed) {
    if (a.empty()) return a;
    std::vector<ord::List> items = a.items();
    ord::List last = std::move(items.back());
    items.pop_back();
    if (!last.empty()) {
        std::vector<ord::List> shorter = last.items();
        shorter.pop_back();
        items.insert(items.end(), seed, ord::List(std::move(shorter)));
    }
    return ord::List(std::move(items));
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

SequenceProgram canonical_descent(const ord::List& start, std::size_t rule_seed) {
    SequenceProgram p;
    p.name = "descent:" + ord::render_brackets(start) + ":" + std::to_string(rule_seed);
    p.initial_state = ord::render_brackets(start);
    p.step = [rule_seed](const State& s) {
        ord::List current = ord::parse_ordinal(s);
        State next = ord::render_brackets(descend(current, rule_seed));
        return Emission{std::move(current), std::move(next)};
    };
    return p;
}

SequenceProgram listed(std::vector<ord::List> values) {
    if (values.empty()) throw std::invalid_argument("listed: at least one value required");
    SequenceProgram p;
    p.name = "list";
    p.initial_state = "0";
    p.state_space_bound = values.size();
    auto shared = std::make_shared<const std::vector<ord::List>>(std::move(values));
    p.step = [shared](const State& s) {
        std::size_t i = parse_count(s, "state");
        std::size_t next = std::min(i + 1, shared->size() - 1);
        return Emission{(*shared)[i], std::to_string(next)};
    };
    return p;
}

SequenceProgram parse_program_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("program spec needs a kind prefix");
    std::string_view kind = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    if (kind == "descent") {
        auto last = rest.rfind(':');
        if (last == std::string_view::npos) throw std::invalid_argument("descent spec is descent:<ordinal>:<seed>");
        ord::List start = ord::parse_ordinal(rest.substr(0, last));
        if (!ord::is_ordinal(start)) throw std::invalid_argument("descent start is not an ordinal");
        return canonical_descent(start, parse_count(rest.substr(last + 1), "seed"));
    }
    if (kind == "list") {
        std::vector<ord::List> values;
        std::size_t from = 0;
        for (;;) {
            auto semi = rest.find(';', from);
            values.push_back(ord::parse_ordinal(rest.substr(from, semi - from)));
            if (semi == std::string_view::npos) break;
            from = semi + 1;
        }
        auto p = listed(std::move(values));
        p.name = std::string(spec);
        return p;
    }
    if (kind == "countdown") {
        std::size_t n = parse_count(rest, "count");
        SequenceProgram p;
        p.name = std::string(spec);
        p.initial_state = std::to_string(n);
        p.state_space_bound = n + 1;
        p.step = [](const State& s) {
            std::size_t k = parse_count(s, "state");
            return Emission{ord::from_nat(k), std::to_string(k == 0 ? 0 : k - 1)};
        };
        return p;
    }
    throw std::invalid_argument("unknown program kind '" + std::string(kind) + "'");
}

std::string to_record(const DescentReport& r) {
    std::string out = "inspected=" + std::to_string(r.inspected);
    out += " strict_decreases=" + std::to_string(r.strict_decreases);
    out += " violation=" + (r.violation ? std::to_string(*r.violation) : std::string("-"));
    if (r.stabilized_at) {
        out += " stabilized_at=" + std::to_string(r.stabilized_at->index);
        out += " certificate=" + std::string(to_string(r.stabilized_at->kind));
    } else {
        out += " stabilized_at=- certificate=-";
    }
    out += " final=" + ord::render_brackets(r.final_value);
    return out;
}

}  // namespace gentzen::seq
