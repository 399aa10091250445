#pragma once

#include <bandlim/coefficients.hpp>
#include <bandlim/errors.hpp>
#include <bandlim/grid.hpp>
#include <bandlim/interpolation.hpp>
#include <bandlim/kernels.hpp>
#include <bandlim/parallel.hpp>
#include <bandlim/quadrature.hpp>
#include <bandlim/signals.hpp>
#include <bandlim/splice.hpp>
