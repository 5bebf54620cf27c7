#pragma once

#include "se2frame/bessel.hpp"
#include "se2frame/cutoff.hpp"
#include "se2frame/error.hpp"
#include "se2frame/framefield.hpp"
#include "se2frame/gramian.hpp"
#include "se2frame/lattice.hpp"
#include "se2frame/oracle.hpp"
#include "se2frame/parallel.hpp"
#include "se2frame/quadrature.hpp"
#include "se2frame/sampling.hpp"
#include "se2frame/types.hpp"
#include "se2frame/wavelet.hpp"
