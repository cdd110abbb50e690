#pragma once

#include <string>
#include <vector>

namespace springer::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance battery; pure except for CPU time.  With
// threads > 1 the independent criteria are dispatched to a worker pool.
std::vector<CriterionResult> run_acceptance(int threads = 1);

}  // namespace springer::verify
