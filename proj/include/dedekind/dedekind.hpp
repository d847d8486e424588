#pragma once

// Umbrella header: exact Dedekind sums, floor-value moments and frequency
// tables, residual-moment bounds, correlation-ratio geometry, and the
// higher-dimensional Cauchy-Schwarz bounds.

#include "dedekind/bounds.hpp"
#include "dedekind/core_sums.hpp"
#include "dedekind/decimal.hpp"
#include "dedekind/frequency.hpp"
#include "dedekind/highdim.hpp"
#include "dedekind/rational.hpp"
#include "dedekind/ratios.hpp"
