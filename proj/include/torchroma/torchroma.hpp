#pragma once

#include "chroma_oracle.hpp"
#include "coloring.hpp"
#include "coloring_engine.hpp"
#include "exact_solver.hpp"
#include "formats.hpp"
#include "lattice_canon.hpp"
#include "sweep.hpp"
#include "torus_graph.hpp"
#include "unshifted.hpp"
