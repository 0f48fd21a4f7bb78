// Print the bound ledger for a small grid and flag the colorable regime.
#include <iomanip>
#include <iostream>

#include "panchro/bounds.hpp"

using namespace panchro;

int main() {
    std::cout << std::fixed << std::setprecision(4);
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t r = 2; r <= 3; ++r) {
            const BoundsReport rep = evaluate_bounds(n, r);
            std::cout << "n=" << n << " r=" << r << "\n";
            for (const BoundEntry& e : rep.entries) {
                if (!e.applicable) continue;
                std::cout << "  " << std::left << std::setw(22) << e.name << std::right
                          << (e.kind == BoundKind::lower ? " >= " : " <= ") << std::setw(12)
                          << e.value << "  (log " << e.log_value << ")"
                          << (e.constant_free ? "" : "  [modeled constants]") << "\n";
            }
        }
    return 0;
}