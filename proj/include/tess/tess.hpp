#ifndef TESS_TESS_HPP
#define TESS_TESS_HPP

#include "builder.hpp"
#include "census.hpp"
#include "checkers.hpp"
#include "curvature.hpp"
#include "discharge.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "exporters.hpp"
#include "format.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "lattice.hpp"
#include "map.hpp"
#include "medial.hpp"
#include "neighborhood.hpp"
#include "patterns.hpp"
#include "rational.hpp"
#include "validate.hpp"

#endif
