#pragma once

// Umbrella header for the deformed-arithmetic library.

#include "automorphism.hpp"
#include "circle.hpp"
#include "duality.hpp"
#include "integral.hpp"
#include "limit.hpp"
#include "line.hpp"
#include "lp_space.hpp"
#include "means.hpp"
#include "pairing.hpp"
