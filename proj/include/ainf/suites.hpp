#pragma once

#include "ainf/algebra.hpp"
#include "ainf/report.hpp"

#include <string>

namespace ainf {

struct RunConfig {
    std::string command; // validate | ainf | order | compat | cohomology | bar | hochschild | all
    std::string input_path;
    int max_arity = 6;
    int max_word = 4;
    int max_cochain = 4;
    unsigned long seed = 0;
    std::string report_path; // empty = stdout
};

// Individual suites; each appends CHECK entries (and LEDGER pins) to the
// report. Preconditions that make a suite inapplicable (missing delta,
// missing pairing, ...) raise std::domain_error, which run() maps to exit 2
// for single commands; `all` only dispatches applicable suites.
void suite_validate(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);
void suite_ainf(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);
void suite_order(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);
void suite_compat(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);
void suite_cohomology(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);
void suite_bar(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);
void suite_hochschild(const GradedAlgebra& alg, const RunConfig& cfg, Report& report);

// Seeded random sweeps behind acceptance-style theorem checks; used by both
// the `ainf` suite and the test binaries.
void suite_random_stasheff(const RunConfig& cfg, Report& report);
void suite_random_assoc(const RunConfig& cfg, Report& report);

// Dispatch per RunConfig without emitting; fills the report and returns the
// exit code contract: 0 all checks pass, 1 some check failed, 2 input or
// usage error (the error text goes to `error` when provided).
int execute(const RunConfig& cfg, Report& report, std::string* error = nullptr);

// execute() plus report emission to stdout or cfg.report_path.
int run(const RunConfig& cfg, Report& report);

} // namespace ainf
