#pragma once

#include "geodex/autsearch.hpp"
#include "geodex/census.hpp"
#include "geodex/constructions.hpp"
#include "geodex/designs.hpp"
#include "geodex/graph.hpp"
#include "geodex/perm.hpp"
#include "geodex/permgroup.hpp"
#include "geodex/permgroup_io.hpp"
#include "geodex/quotients.hpp"
#include "geodex/regularity.hpp"
#include "geodex/report_json.hpp"
#include "geodex/symmetry.hpp"
#include "geodex/tuple_orbit.hpp"
#include "geodex/walks.hpp"
