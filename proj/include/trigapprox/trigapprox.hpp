// Umbrella header.

#pragma once

#include "trigapprox/approx.hpp"
#include "trigapprox/derivative.hpp"
#include "trigapprox/extremal.hpp"
#include "trigapprox/fft.hpp"
#include "trigapprox/grid.hpp"
#include "trigapprox/harness.hpp"
#include "trigapprox/psi.hpp"
#include "trigapprox/random.hpp"
#include "trigapprox/trig_polynomial.hpp"
