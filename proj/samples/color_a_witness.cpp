// Build a hard instance, fail to color it, shrink the demand, succeed.
#include <iostream>

#include "panchro/colorers.hpp"
#include "panchro/constructions.hpp"
#include "panchro/json_io.hpp"
#include "panchro/oracle.hpp"

using namespace panchro;

int main() {
    const auto name = [](OracleStatus s) {
        return s == OracleStatus::colorable     ? "colorable"
               : s == OracleStatus::uncolorable ? "uncolorable"
                                                : "undecided";
    };
    const Hypergraph h = shift_witness(ShiftParams{3, 2, 1});
    std::cout << "witness: " << h.num_vertices() << " vertices, " << h.num_edges()
              << " edges, " << h.uniformity() << "-uniform\n";

    const OracleResult hard = decide_panchromatic(h, 2);
    std::cout << "2 colors: " << name(hard.status) << " (" << hard.nodes
              << " search nodes)\n";

    const ColorerOutcome out = alteration_colorer(h, 2, 17);
    std::cout << "alteration with 2 colors: "
              << (out.coloring ? "colored" : "gave up") << " after " << out.attempts
              << " attempts\n";

    // a single color is always satisfiable on a nonempty vertex set
    const OracleResult easy = decide_panchromatic(h, 1);
    std::cout << "1 color: " << name(easy.status) << "\n";
    if (easy.coloring) std::cout << coloring_to_json(*easy.coloring).dump() << "\n";
    return 0;
}