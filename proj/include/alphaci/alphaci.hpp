#pragma once

// Umbrella header: exact alpha invariants and A-hat genera of smooth
// complex projective complete intersections, with the exhaustive
// profile-grouping scanner.

#include "ahat.hpp"
#include "alpha.hpp"
#include "gf2poly.hpp"
#include "numtheory.hpp"
#include "series.hpp"
#include "sullivan.hpp"
#include "topology.hpp"
