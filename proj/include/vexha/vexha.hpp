#pragma once

// Variable-exponent harmonic analysis on the periodic grid: Luxemburg norms,
// Littlewood-Paley families, Carleson measure / sequence / Campanato /
// Hoelder-Zygmund norms, the analysis/synthesis transform pair, stopping-time
// atomic decomposition, multiplier Calderon-Zygmund operators, and the named
// verification suites.

#include "atomic.hpp"
#include "config.hpp"
#include "duality_czo.hpp"
#include "dyadic.hpp"
#include "exponent.hpp"
#include "fft.hpp"
#include "generators.hpp"
#include "grid.hpp"
#include "littlewood_paley.hpp"
#include "luxemburg.hpp"
#include "parallel.hpp"
#include "phi_transform.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "signal_io.hpp"
#include "space_norms.hpp"
#include "verify.hpp"
