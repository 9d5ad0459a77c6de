#pragma once

// Umbrella header for the whole library.

#include "roughlab/universe.hpp"      // IWYU pragma: export
#include "roughlab/relation.hpp"      // IWYU pragma: export
#include "roughlab/ideal.hpp"         // IWYU pragma: export
#include "roughlab/rational.hpp"      // IWYU pragma: export
#include "roughlab/neighborhood.hpp"  // IWYU pragma: export
#include "roughlab/approximation.hpp" // IWYU pragma: export
#include "roughlab/topology.hpp"      // IWYU pragma: export
#include "roughlab/claims.hpp"        // IWYU pragma: export
#include "roughlab/fixtures.hpp"      // IWYU pragma: export
