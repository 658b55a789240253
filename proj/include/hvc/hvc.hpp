#pragma once

#include "hvc/closed_form.hpp"
#include "hvc/core.hpp"
#include "hvc/error.hpp"
#include "hvc/fields.hpp"
#include "hvc/flow.hpp"
#include "hvc/fractal_dimension.hpp"
#include "hvc/integrals.hpp"
#include "hvc/pde1d.hpp"
#include "hvc/quadrature.hpp"
#include "hvc/theorems.hpp"
#include "hvc/vecops.hpp"
