#pragma once

#include "vort/fft.hpp"
#include "vort/functionals.hpp"
#include "vort/grid.hpp"
#include "vort/io.hpp"
#include "vort/littlewood_paley.hpp"
#include "vort/monitor.hpp"
#include "vort/operators.hpp"
#include "vort/random_field.hpp"
#include "vort/solver.hpp"
#include "vort/svg.hpp"
#include "vort/vorticity.hpp"
