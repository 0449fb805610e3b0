#pragma once

#include <swiptfog/channel.hpp>
#include <swiptfog/params.hpp>
#include <swiptfog/solution.hpp>

#include <optional>

namespace swiptfog::tools {

/// Runs a plan made on estimated CSI over the true gains. The mode and every time slot are kept;
/// the PS ratio and the uplink power are re-derived so both links still carry R_th. Empty (outage)
/// when the PS ratio reaches 1 or the uplink would need more than p_uf_max. The feedback slot is
/// the FS's concern and is not re-checked.
std::optional<ModeSolution> replay_plan(const SystemParams& params, const ModeSolution& plan,
                                        const LinkGains& truth);

} // namespace swiptfog::tools
