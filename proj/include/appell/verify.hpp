#ifndef APPELL_VERIFY_HPP
#define APPELL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "appell/types.hpp"

namespace appell {

// One verified identity instance: the suite it belongs to, a deterministic
// case label, the two-sided evaluation, and the tolerance it was held to.
struct VerifyCase {
    std::string suite;
    std::string label;
    IdentityReport report;
    double tolerance;
    bool pass;
};

struct VerifySummary {
    std::vector<VerifyCase> cases;
    std::size_t failures = 0;

    void add(VerifyCase c) {
        if (!c.pass) ++failures;
        cases.push_back(std::move(c));
    }
    void append(VerifySummary other) {
        failures += other.failures;
        for (auto& c : other.cases) cases.push_back(std::move(c));
    }
};

// Deterministic randomized suites; the same seed reproduces the same cases
// bit for bit.  Each case carries the tolerance it is checked against.
VerifySummary verify_appendix(std::uint64_t seed);
VerifySummary verify_recurrences(std::uint64_t seed);
VerifySummary verify_continuations(std::uint64_t seed);
VerifySummary verify_physics(std::uint64_t seed);
VerifySummary verify_all(std::uint64_t seed);

VerifySummary run_verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace appell

#endif
