#include "swiptfog/solution.hpp"

namespace swiptfog {

const char* to_string(Mode mode) noexcept {
    switch (mode) {
    case Mode::Local: return "Local";
    case Mode::Offload: return "Offload";
    case Mode::HarvestOnly: return "HarvestOnly";
    }
    return "Unknown";
}

ModeSolution with_credit(ModeSolution solution, double iota, double e_s) noexcept {
    solution.iota = iota;
    solution.e_s = e_s;
    solution.e_eh = solution.e_rf + iota;
    solution.e_u = solution.e_id + solution.e_cpt + solution.e_uf - solution.e_eh - e_s;
    return solution;
}

} // namespace swiptfog
