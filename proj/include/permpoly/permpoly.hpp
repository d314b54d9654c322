#pragma once

// Umbrella header for the permpoly library.

#include "permpoly/errors.hpp"
#include "permpoly/interpolation.hpp"
#include "permpoly/modular.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/serialize.hpp"
