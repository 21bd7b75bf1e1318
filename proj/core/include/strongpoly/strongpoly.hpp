#pragma once

#include "strongpoly/canonical.hpp"
#include "strongpoly/coloured_tree.hpp"
#include "strongpoly/cotree.hpp"
#include "strongpoly/errors.hpp"
#include "strongpoly/expansions.hpp"
#include "strongpoly/families.hpp"
#include "strongpoly/graph.hpp"
#include "strongpoly/graph_polynomials.hpp"
#include "strongpoly/hom.hpp"
#include "strongpoly/interpolation.hpp"
#include "strongpoly/io.hpp"
#include "strongpoly/linalg.hpp"
#include "strongpoly/multipoly.hpp"
#include "strongpoly/rational.hpp"
#include "strongpoly/sequence.hpp"
#include "strongpoly/sexpr.hpp"
#include "strongpoly/verify.hpp"
