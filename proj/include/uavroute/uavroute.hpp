#pragma once

#include "uavroute/types.hpp"
#include "uavroute/model.hpp"
#include "uavroute/geometry.hpp"
#include "uavroute/graph.hpp"
#include "uavroute/planner.hpp"
#include "uavroute/planner_battery.hpp"
#include "uavroute/payload.hpp"
#include "uavroute/validate.hpp"
#include "uavroute/grid_oracle.hpp"
#include "uavroute/mapgen.hpp"
#include "uavroute/bench.hpp"
