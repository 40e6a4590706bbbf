#pragma once

#include "geometry.hpp"
#include "fixed_hull.hpp"
#include "vertex_events.hpp"
#include "staircase_set.hpp"
#include "arc_chain.hpp"
#include "arc_intersect.hpp"
#include "overlap_table.hpp"
#include "area_sweep.hpp"
#include "oracle.hpp"
#include "io.hpp"
