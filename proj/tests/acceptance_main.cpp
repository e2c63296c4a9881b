// Runs every acceptance criterion and prints one PASS/FAIL line each, with timings.

#include <iomanip>
#include <iostream>

#include "equisym/acceptance.hpp"

int main() {
    bool all = true;
    for (const auto& r : equisym::acceptance::runAll()) {
        std::cout << equisym::acceptance::formatResult(r) << " (" << std::fixed << std::setprecision(2) << r.seconds
                  << " s, limit " << std::setprecision(0) << r.limitSeconds << " s)\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
    return all ? 0 : 1;
}
