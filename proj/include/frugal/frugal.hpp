#pragma once
// Umbrella header.

#include "frugal/core.hpp"
#include "frugal/flow.hpp"
#include "frugal/io.hpp"
#include "frugal/oracles.hpp"
#include "frugal/reductions.hpp"
#include "frugal/solvers.hpp"
#include "frugal/vulnerability.hpp"
