#pragma once

#include "cellman/classification.hpp"
#include "cellman/constructions.hpp"
#include "cellman/error.hpp"
#include "cellman/gale.hpp"
#include "cellman/io.hpp"
#include "cellman/isomorphism.hpp"
#include "cellman/lattice.hpp"
#include "cellman/symmetry.hpp"
#include "cellman/vertex_set.hpp"
