#pragma once

#include "achroma/bounds.hpp"
#include "achroma/coloring.hpp"
#include "achroma/constructions.hpp"
#include "achroma/decompositions.hpp"
#include "achroma/embedding.hpp"
#include "achroma/error.hpp"
#include "achroma/factorization.hpp"
#include "achroma/generators.hpp"
#include "achroma/girth.hpp"
#include "achroma/graph.hpp"
#include "achroma/io.hpp"
#include "achroma/planarity.hpp"
#include "achroma/platonic.hpp"
#include "achroma/solver.hpp"
#include "achroma/verification.hpp"
