#pragma once

#include <stdexcept>
#include <string>

namespace swiptfog {

/// Why a mode (or both modes) cannot serve a block.
enum class Infeasibility {
    None,
    ComputeTooSlow,  ///< K * R_th >= f_op, no time left to receive
    ChannelTooWeak,  ///< the PS ratio needed to decode reaches 1
    BudgetExhausted, ///< fog compute and feedback slots fill the block
    LinkTooWeak,     ///< uplink at full power cannot fit in the budget
    BothModesInfeasible,
};

const char* to_string(Infeasibility reason) noexcept;

/// Feasibility verdict with a structured reason.
struct Verdict {
    Infeasibility reason = Infeasibility::None;

    [[nodiscard]] bool feasible() const noexcept { return reason == Infeasibility::None; }
    explicit operator bool() const noexcept { return feasible(); }
};

class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(Infeasibility reason);
    InfeasibleError(Infeasibility reason, const std::string& detail);

    [[nodiscard]] Infeasibility reason() const noexcept { return reason_; }

private:
    Infeasibility reason_;
};

/// The energy difference between modes has no sign change on the search bracket.
class NoCrossover : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force lattice contained no point satisfying the constraints.
class NoFeasiblePoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed parameter or configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace swiptfog
