#pragma once

// Convenience umbrella: the whole library in one include.

#include "invgen/atlas.hpp"
#include "invgen/bits.hpp"
#include "invgen/certify.hpp"
#include "invgen/condition_stats.hpp"
#include "invgen/coverage.hpp"
#include "invgen/cycle_type.hpp"
#include "invgen/cycle_type_set.hpp"
#include "invgen/errors.hpp"
#include "invgen/linear_group.hpp"
#include "invgen/numbers.hpp"
#include "invgen/perm_group.hpp"
#include "invgen/permutation.hpp"
#include "invgen/poly_int.hpp"
#include "invgen/poly_mod.hpp"
#include "invgen/rng.hpp"
#include "invgen/small_group.hpp"
