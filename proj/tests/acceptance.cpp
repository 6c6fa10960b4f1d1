// Acceptance suite: runs every verification item at its stated tolerance and
// prints one pass/fail line per criterion. The budget-flagged stretch item
// may report a skip; every other item must pass.

#include <cstdio>
#include <string>

#include "bcross/report.hpp"

int main() {
    bcross::SuiteOptions opts;
    const auto outcomes = bcross::run_small_suite(opts);

    int failures = 0;
    double total = 0;
    for (const auto& o : outcomes) {
        total += o.seconds;
        const char* tag = "PASS";
        if (o.status == bcross::VerificationOutcome::Status::Fail) {
            tag = "FAIL";
            ++failures;
        } else if (o.status == bcross::VerificationOutcome::Status::SkippedBudget) {
            if (o.required) {
                tag = "FAIL";
                ++failures;
            } else {
                tag = "SKIP";
            }
        }
        std::printf("[%s] %-30s %7.2fs  %s\n", tag, o.id.c_str(), o.seconds,
                    (o.status == bcross::VerificationOutcome::Status::Pass ? o.actual : o.note).c_str());
    }
    std::printf("----\n%s: %zu criteria, %d failures, %.1fs total\n",
                failures == 0 ? "ACCEPTED" : "REJECTED", outcomes.size(), failures, total);
    return failures == 0 ? 0 : 1;
}
