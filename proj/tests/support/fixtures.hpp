#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentzen/proof.hpp"

#ifndef GENTZEN_FIXTURES
#error "GENTZEN_FIXTURES must name the fixture directory"
#endif

namespace gentzen::testing {

struct ProofFixture {
    std::string name;
    std::string goal;
};

inline const std::vector<ProofFixture>& proof_fixtures() {
    static const std::vector<ProofFixture> all = {
        {"reflexivity", "forall x. x = x"},
        {"zero_plus_zero", "0 + 0 = 0"},
        {"identity", "x = 0 -> x = 0"},
        {"symmetry", "forall x. forall y. (x = y -> y = x)"},
        {"calculation", "SS0 * SS0 = SSSS0 & !(SS0 + SS0 = SSS0)"},
        {"zero_left_identity", "forall x. 0 + x = x"},
    };
    return all;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline proof::Proof load_fixture(const std::string& name) {
    return proof::parse_proof(read_file(std::string(GENTZEN_FIXTURES) + "/" + name + ".proof"));
}

}  // namespace gentzen::testing
