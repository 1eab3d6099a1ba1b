#pragma once

#include "lhm/automorphism.hpp"
#include "lhm/classify.hpp"
#include "lhm/constructions.hpp"
#include "lhm/error.hpp"
#include "lhm/finite_group.hpp"
#include "lhm/hypermap.hpp"
#include "lhm/permutation.hpp"
#include "lhm/regular.hpp"
