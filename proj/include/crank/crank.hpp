#pragma once

#include "crank/asymptotics.hpp"
#include "crank/bigint.hpp"
#include "crank/bivariate.hpp"
#include "crank/circle.hpp"
#include "crank/error.hpp"
#include "crank/factor.hpp"
#include "crank/moments.hpp"
#include "crank/parity.hpp"
#include "crank/partitions.hpp"
#include "crank/quadrature.hpp"
#include "crank/series.hpp"
#include "crank/series_eval.hpp"
#include "crank/verify.hpp"
