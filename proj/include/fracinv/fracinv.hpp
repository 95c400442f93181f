#pragma once

// Everything except the JSON/CSV layer (io.hpp), which needs nlohmann/json.

#include "error.hpp"
#include "fourier1d.hpp"
#include "invasion.hpp"
#include "kernels.hpp"
#include "log_value.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "subordination.hpp"
#include "verify.hpp"
