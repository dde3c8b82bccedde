#pragma once

#include "fucik/closedform.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/error.hpp"
#include "fucik/grammatrix.hpp"
#include "fucik/nearness.hpp"
#include "fucik/paleywiener.hpp"
#include "fucik/parallel.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/sampling.hpp"
#include "fucik/spectrum.hpp"
#include "fucik/system.hpp"
#include "fucik/zeta.hpp"
