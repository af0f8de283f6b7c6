#pragma once

#include "isqw/convergence.hpp"
#include "isqw/dist_expr.hpp"
#include "isqw/errors.hpp"
#include "isqw/finite_well.hpp"
#include "isqw/grid.hpp"
#include "isqw/numerics.hpp"
#include "isqw/packet.hpp"
#include "isqw/potential.hpp"
#include "isqw/smooth_fn.hpp"
#include "isqw/spectral.hpp"
#include "isqw/time_series.hpp"
#include "isqw/well.hpp"
