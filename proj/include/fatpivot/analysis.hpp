#pragma once

#include "fatpivot/analysis/beta.hpp"
#include "fatpivot/analysis/bounds.hpp"
#include "fatpivot/analysis/brute_force.hpp"
#include "fatpivot/analysis/entropy.hpp"
#include "fatpivot/analysis/rational.hpp"
#include "fatpivot/analysis/search_cost.hpp"
