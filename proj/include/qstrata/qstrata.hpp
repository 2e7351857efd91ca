#pragma once

// Everything: root data, Weyl groups, lattices, invariants, the finite-field
// algebra oracle, Cayley graphs, whole-group tables and JSON output.

#include "errors.hpp"
#include "intmat.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"
#include "lattice.hpp"
#include "invariants.hpp"
#include "fp.hpp"
#include "skewalg.hpp"
#include "quiver.hpp"
#include "strata.hpp"
#include "io.hpp"
#include "verify.hpp"
