#pragma once

#include "swiptfog/analysis.hpp"
#include "swiptfog/channel.hpp"
#include "swiptfog/errors.hpp"
#include "swiptfog/format.hpp"
#include "swiptfog/frame_sim.hpp"
#include "swiptfog/local_solver.hpp"
#include "swiptfog/mode_selector.hpp"
#include "swiptfog/offload_solver.hpp"
#include "swiptfog/oracle.hpp"
#include "swiptfog/params.hpp"
#include "swiptfog/random.hpp"
#include "swiptfog/scheduler.hpp"
#include "swiptfog/solution.hpp"
