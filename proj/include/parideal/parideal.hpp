#pragma once

// Umbrella header: finite root systems, parabolic antichain/ideal
// combinatorics, irreducible weight-space sets, verification suites,
// serialization, and the command-line front end.

#include "parideal/rational.hpp"
#include "parideal/report.hpp"
#include "parideal/root_system.hpp"
#include "parideal/poset_ideals.hpp"
#include "parideal/classical_families.hpp"
#include "parideal/irreducible.hpp"
#include "parideal/verify.hpp"
#include "parideal/serialization.hpp"
#include "parideal/cli.hpp"
