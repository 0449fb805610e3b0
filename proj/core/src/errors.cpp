#include "swiptfog/errors.hpp"

namespace swiptfog {

const char* to_string(Infeasibility reason) noexcept {
    switch (reason) {
    case Infeasibility::None: return "None";
    case Infeasibility::ComputeTooSlow: return "ComputeTooSlow";
    case Infeasibility::ChannelTooWeak: return "ChannelTooWeak";
    case Infeasibility::BudgetExhausted: return "BudgetExhausted";
    case Infeasibility::LinkTooWeak: return "LinkTooWeak";
    case Infeasibility::BothModesInfeasible: return "BothModesInfeasible";
    }
    return "Unknown";
}

InfeasibleError::InfeasibleError(Infeasibility reason)
    : std::runtime_error(std::string("infeasible: ") + to_string(reason)), reason_(reason) {}

InfeasibleError::InfeasibleError(Infeasibility reason, const std::string& detail)
    : std::runtime_error(std::string("infeasible: ") + to_string(reason) + " (" + detail + ")"),
      reason_(reason) {}

} // namespace swiptfog
