#pragma once

#include "hsgraph/corpus.hpp"
#include "hsgraph/generators.hpp"
#include "hsgraph/graph.hpp"
#include "hsgraph/report.hpp"
#include "hsgraph/resistance.hpp"
#include "hsgraph/symmetry.hpp"
#include "hsgraph/verify.hpp"
#include "hsgraph/walks.hpp"
