#pragma once

// Umbrella header: panchromatic colorings of n-uniform hypergraphs.

#include "panchro/bounds.hpp"
#include "panchro/cli_app.hpp"
#include "panchro/colorers.hpp"
#include "panchro/constructions.hpp"
#include "panchro/experiment.hpp"
#include "panchro/hypergraph.hpp"
#include "panchro/json_io.hpp"
#include "panchro/oracle.hpp"
#include "panchro/rng.hpp"
#include "panchro/turan.hpp"
