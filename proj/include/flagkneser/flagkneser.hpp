#pragma once

// Umbrella header: the whole library.

#include "flagkneser/bits.hpp"
#include "flagkneser/families.hpp"
#include "flagkneser/io.hpp"
#include "flagkneser/opposition_graph.hpp"
#include "flagkneser/random_families.hpp"
#include "flagkneser/setcore.hpp"
#include "flagkneser/shifting.hpp"
#include "flagkneser/solver.hpp"
#include "flagkneser/verify.hpp"
#include "flagkneser/version.hpp"
#include "flagkneser/weights.hpp"
