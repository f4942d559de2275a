#pragma once

// Umbrella header for the whole library.

#include "longmem/error.hpp"
#include "longmem/fft.hpp"
#include "longmem/specfun.hpp"
#include "longmem/series.hpp"
#include "longmem/moments.hpp"
#include "longmem/generate.hpp"
#include "longmem/optimize.hpp"
#include "longmem/regression.hpp"
#include "longmem/toeplitz.hpp"
#include "longmem/estimate_classic.hpp"
#include "longmem/estimate_semiparam.hpp"
#include "longmem/estimate_param.hpp"
#include "longmem/forecast.hpp"
#include "longmem/data.hpp"
#include "longmem/plot.hpp"
#include "longmem/bench.hpp"

namespace longmem {
inline constexpr const char *version = "0.1.0";
}
