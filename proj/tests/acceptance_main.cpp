// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "springer/verify.hpp"

int main() {
    auto results = springer::verify::run_acceptance(1);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s  %2d  %-34s %6.2fs%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.empty() ? "" : "  ",
                    r.detail.c_str());
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
