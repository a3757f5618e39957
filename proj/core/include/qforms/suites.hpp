#pragma once

#include "qforms/verdict.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qforms {

// One deferred identity check; `run` is pure and safe to execute on any
// thread.
struct Check {
    std::string name;
    std::function<Verdict()> run;
};

struct SuiteOptions {
    long order = 100;
    // Injects one known-bad coefficient into the suite; the run must then
    // fail with a diagnostic. Used as a negative control of the pipeline.
    bool mutate = false;
    long combinatorial_max_n = 10000;
    long parity_max_n = 5000;
};

std::vector<Check> suite_diffeq(const SuiteOptions& opt);
std::vector<Check> suite_table1(const SuiteOptions& opt);
std::vector<Check> suite_ode(const SuiteOptions& opt);
std::vector<Check> suite_triangular(const SuiteOptions& opt);
std::vector<Check> suite_combinatorial(const SuiteOptions& opt);

// "diffeq", "table1", "ode", "triangular", "combinatorial" or "all".
std::vector<Check> make_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

// Runs every check on a bounded worker pool (jobs = 0 picks the hardware
// count). Results are returned in the checks' order regardless of
// completion order; a throwing check becomes a failed verdict.
std::vector<Verdict> run_checks(const std::vector<Check>& checks, unsigned jobs);

}  // namespace qforms
