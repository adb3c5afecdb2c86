#pragma once

// Umbrella header. Exact curvature constants of bounded symmetric domains,
// published effectivity bounds, and certified integer thresholds.

#include <hypconst/rational.hpp>
#include <hypconst/interval.hpp>
#include <hypconst/bernoulli.hpp>
#include <hypconst/elementary.hpp>
#include <hypconst/siegel.hpp>
#include <hypconst/ball.hpp>
#include <hypconst/bounds.hpp>
#include <hypconst/thresholds.hpp>
#include <hypconst/oracle.hpp>
