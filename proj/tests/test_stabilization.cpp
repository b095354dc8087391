#include "doctest.h"

#include "gentzen/stabilization.hpp"

using namespace gentzen;
using namespace gentzen::seq;

namespace {

SequenceProgram constant_empty() {
    SequenceProgram p;
    p.name = "constant";
    p.initial_state = "s";
    p.step = [](const State& s) { return Emission{ord::List{}, s}; };
    p.state_space_bound = 1;
    return p;
}

}  // namespace

TEST_CASE("monitor: constant program") {
    auto r = monitor(constant_empty(), 10);
    REQUIRE(r.stabilized_at);
    CHECK(r.stabilized_at->index == 1);
    CHECK(r.stabilized_at->kind == CertificateKind::StateCycle);
    CHECK(r.strict_decreases == 0);
    CHECK_FALSE(r.violation);
}

TEST_CASE("monitor: countdown from 5") {
    auto r = monitor(parse_program_spec("countdown:5"), 20);
    CHECK(r.strict_decreases == 5);
    REQUIRE(r.stabilized_at);
    CHECK(r.stabilized_at->index == 6);
    CHECK(r.certified());
    CHECK(r.final_value == ord::List{});
}

TEST_CASE("monitor: an increase is a violation") {
    auto r = monitor(listed({ord::List{}, ord::from_nat(1)}), 10);
    REQUIRE(r.violation);
    CHECK(*r.violation == 1);
    CHECK_FALSE(r.stabilized_at);
}

TEST_CASE("monitor: a cycle through different values is never certified") {
    // Two states alternating between 1 and 0: the wrap-around is an increase.
    SequenceProgram p;
    p.initial_state = "a";
    p.step = [](const State& s) {
        return s == "a" ? Emission{ord::from_nat(1), "b"} : Emission{ord::from_nat(0), "a"};
    };
    auto r = monitor(p, 50);
    CHECK(r.violation);
    CHECK_FALSE(r.stabilized_at);
}

TEST_CASE("monitor: budget window is reported but not certified") {
    // Fresh state every step, constant output: no cycle, so only the heuristic fires.
    SequenceProgram p;
    p.initial_state = "0";
    p.step = [](const State& s) { return Emission{ord::from_nat(2), s + "+"}; };
    auto r = monitor(p, 12);
    REQUIRE(r.stabilized_at);
    CHECK(r.stabilized_at->kind == CertificateKind::BudgetWindow);
    CHECK(r.stabilized_at->index == 1);
    CHECK_FALSE(r.certified());

    auto short_run = monitor(p, 5);
    CHECK_FALSE(short_run.stabilized_at);

    auto narrow = monitor(p, 5, MonitorOptions{3});
    CHECK(narrow.stabilized_at);
}

TEST_CASE("monitor: zero budget is rejected") {
    CHECK_THROWS_AS(monitor(constant_empty(), 0), std::invalid_argument);
}

TEST_CASE("canonical_descent") {
    SUBCASE("from zero") {
        auto r = monitor(canonical_descent(ord::List{}, 2), 10);
        REQUIRE(r.stabilized_at);
        CHECK(r.stabilized_at->index == 1);
    }
    SUBCASE("one descends to zero") {
        auto p = canonical_descent(ord::from_nat(1), 0);
        auto e1 = p.step(p.initial_state);
        CHECK(e1.output == ord::from_nat(1));
        auto e2 = p.step(e1.next);
        CHECK(e2.output == ord::List{});
        CHECK(p.step(e2.next).output == ord::List{});
    }
    SUBCASE("omega with seed 3") {
        auto p = canonical_descent(ord::parse_ordinal("[[[]]]"), 3);
        auto e1 = p.step(p.initial_state);
        CHECK(e1.output == ord::parse_ordinal("[[[]]]"));
        CHECK(p.step(e1.next).output == ord::from_nat(3));
        auto r = monitor(p, 100);
        CHECK_FALSE(r.violation);
        REQUIRE(r.stabilized_at);
        CHECK(r.certified());
        // w, 3, 2, 1, 0
        CHECK(r.stabilized_at->index == 5);
        CHECK(r.strict_decreases == 4);
    }
}

TEST_CASE("canonical_descent is weakly decreasing over the small corpus") {
    for (const auto& start : ord::enumerate_ordinals(6)) {
        for (std::size_t seed = 0; seed <= 3; ++seed) {
            auto r = monitor(canonical_descent(start, seed), 100000);
            CHECK_FALSE(r.violation);
            CHECK(r.certified());
            CHECK(r.final_value == ord::List{});
        }
    }
}

TEST_CASE("records") {
    auto r = monitor(parse_program_spec("countdown:2"), 10);
    CHECK(to_record(r) == "inspected=3 strict_decreases=2 violation=- stabilized_at=3 certificate=state-cycle final=[]");
    CHECK_THROWS_AS(parse_program_spec("bogus:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_program_spec("descent:[[],[[]]]:1"), std::invalid_argument);
}
