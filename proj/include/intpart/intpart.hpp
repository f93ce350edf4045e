#pragma once

// Umbrella header.

#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "generators.hpp"
#include "enumerate.hpp"
#include "structure.hpp"
#include "ratio.hpp"
#include "partition.hpp"
#include "search/outcome.hpp"
#include "search/exhaustive.hpp"
#include "search/min_cut.hpp"
#include "search/lemma1.hpp"
#include "search/potential.hpp"
#include "search/sweep.hpp"
#include "search/refine.hpp"
#include "structured/edge_coloring.hpp"
#include "structured/external_census.hpp"
#include "structured/duality.hpp"
#include "structured/high_degree.hpp"
#include "structured/bridge.hpp"
