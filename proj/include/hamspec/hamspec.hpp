#pragma once

#include "hamspec/error.hpp"
#include "hamspec/rational.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/enumerate.hpp"
#include "hamspec/oracles.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/certifier.hpp"
#include "hamspec/random.hpp"
#include "hamspec/sweep.hpp"
