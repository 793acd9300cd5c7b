#pragma once

#include "vortex/chambers.hpp"
#include "vortex/error.hpp"
#include "vortex/exactmath.hpp"
#include "vortex/flips.hpp"
#include "vortex/pairs.hpp"
#include "vortex/strata.hpp"
