#pragma once

#include <functional>
#include <string>
#include <vector>

#include "smlab/cocycle.hpp"
#include "smlab/torus.hpp"

namespace smlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;   // the quantity compared against the tolerance
    double tolerance = 0.0;
    std::string detail;
};

using StepFn = TorusPoint (*)(TorusPoint, const MapSpec&);

// Seams for mutation testing: the suite runs its cocycle and orbit checks
// through these, so a corrupted transfer matrix or an unreduced map step must
// surface as check failures.
struct ValidationHooks {
    TransferFn transfer = transfer_matrix;
    StepFn step = map_step;
};

std::vector<std::string> validation_check_names();

// Runs the oracle suite (free exponent, Herman floor, standard-map
// positivity, SL(2) bookkeeping, reflectionless Green's function, recurrence,
// reproducibility, symplectic invariants). `only` restricts to the named
// checks; empty means all. `threads` parallelizes the heavy sweeps.
std::vector<CheckResult> run_validation_suite(const ValidationHooks& hooks = {},
                                              const std::vector<std::string>& only = {},
                                              int threads = 0);

// One line per check; returns the number of failures.
int print_validation_report(const std::vector<CheckResult>& results);

}  // namespace smlab
