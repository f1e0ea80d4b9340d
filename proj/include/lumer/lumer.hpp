#pragma once

#include "lumer/conformal.hpp"
#include "lumer/conjugate.hpp"
#include "lumer/dirichlet.hpp"
#include "lumer/errors.hpp"
#include "lumer/fft.hpp"
#include "lumer/grid.hpp"
#include "lumer/majorant.hpp"
#include "lumer/random.hpp"
#include "lumer/riesz.hpp"
#include "lumer/trig_series.hpp"
