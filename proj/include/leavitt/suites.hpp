#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "leavitt/algebra_element.hpp"
#include "leavitt/scalar.hpp"

namespace leavitt {

struct SuiteConfig {
    Field field = Field::rationals();
    long order = 16;
    std::uint64_t seed = 0;
    int trials = 200;
};

struct SuiteFailure {
    std::string literal;  // minimized counterexample, printable form
    std::string message;  // which claim broke
};

struct SuiteReport {
    std::string suite;
    std::string statement;
    int trials = 0;
    std::vector<SuiteFailure> failures;
    double wall_ms = 0.0;
    bool passed() const { return failures.empty(); }
};

// The registered suite names, in the order run-all executes them.
const std::vector<std::string>& suite_names();

// Runs one suite; throws error for an unknown name. Each suite derives its
// random stream from the seed mixed with the suite name, so results do not
// depend on which other suites ran.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

std::vector<SuiteReport> run_all_suites(const SuiteConfig& config);

// Greedy counterexample shrinking: repeatedly drop terms (then letters or
// coefficients) while the predicate keeps reporting failure. Exposed for
// the harness's own tests.
AlgebraElement minimize_element(const AlgebraElement& a,
                                const std::function<bool(const AlgebraElement&)>& still_fails);
std::vector<Gen> minimize_word(const std::vector<Gen>& w,
                               const std::function<bool(const std::vector<Gen>&)>& still_fails);

}  // namespace leavitt
