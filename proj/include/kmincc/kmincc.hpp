#pragma once

// Umbrella header for the bounded-cluster consensus clustering toolkit.

#include "kmincc/bench.hpp"
#include "kmincc/enumeration.hpp"
#include "kmincc/errors.hpp"
#include "kmincc/exact.hpp"
#include "kmincc/generators.hpp"
#include "kmincc/instance.hpp"
#include "kmincc/io.hpp"
#include "kmincc/local_search.hpp"
#include "kmincc/partition.hpp"
#include "kmincc/ptas.hpp"
#include "kmincc/reduction.hpp"
#include "kmincc/rng.hpp"
#include "kmincc/stats.hpp"
