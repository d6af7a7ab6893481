#pragma once

// Heegaard Floer HF+ for integral homology spheres bounding negative-definite
// almost-rational plumbing trees: tau functions, graded roots, Z[U]-module
// decompositions, Casson cross-checks, and the Mazur/Brieskorn generators.

#include "checked.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graded_root.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "hf.hpp"
#include "intersection_form.hpp"
#include "run.hpp"
#include "tau.hpp"
#include "validation.hpp"
