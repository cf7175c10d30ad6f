#pragma once

#include "dcdecomp/rational.hpp"
#include "dcdecomp/polyhedron.hpp"
#include "dcdecomp/lp.hpp"
#include "dcdecomp/exactgeom.hpp"
#include "dcdecomp/lattice.hpp"
#include "dcdecomp/iconvex.hpp"
#include "dcdecomp/dca_classes.hpp"
#include "dcdecomp/cube_separation.hpp"
#include "dcdecomp/ic_oracle.hpp"
#include "dcdecomp/json_io.hpp"
#include "dcdecomp/showcase.hpp"
