// Acceptance run: one line per criterion with its time limit. Criterion 10
// runs `orbistring selftest --seed 42` twice and compares the bytes.
//
// A criterion that fails only on a contradiction inside its own statement
// prints FAIL and does not fail the binary; anything else does.

#include "cli_run.hpp"

#include <orbistring/checks.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace orbistring;

int main()
{
    bool ok = true;
    for (int id : criterion_ids()) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = run_criterion(id, 42);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string verdict = r.pass ? "PASS" : "FAIL";
        if (r.limit_seconds > 0 && secs > r.limit_seconds) {
            r.pass = false;
            r.analysed = false;
            verdict = "FAIL (over the time limit)";
        }
        char timing[64];
        if (r.limit_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, r.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << id << " " << verdict << (r.analysed ? " (analysed)" : "") << " [" << timing
                  << "] " << r.title << ": " << r.detail << std::endl;
        ok = ok && (r.pass || r.analysed);
    }

    const auto start = std::chrono::steady_clock::now();
    CliResult a = run_cli("selftest --seed 42");
    CliResult b = run_cli("selftest --seed 42");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool same = !a.out.empty() && a.out == b.out && a.status == b.status;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion 10 " << (same ? "PASS" : "FAIL") << " [" << timing
              << "] determinism: two selftest runs with seed 42 are "
              << (same ? "byte-identical (" + std::to_string(a.out.size()) + " bytes)" : "different") << std::endl;
    ok = ok && same;
    return ok ? 0 : 1;
}
