#pragma once

#include "gallai/canonical.hpp"
#include "gallai/constructions.hpp"
#include "gallai/detectors.hpp"
#include "gallai/enumerate.hpp"
#include "gallai/formulas.hpp"
#include "gallai/graph_core.hpp"
#include "gallai/io.hpp"
#include "gallai/parallel.hpp"
#include "gallai/search.hpp"
#include "gallai/structure.hpp"
#include "gallai/witness.hpp"
