#pragma once

#include "gatesimp/common.hpp"
#include "gatesimp/cover_check.hpp"
#include "gatesimp/cover_instance.hpp"
#include "gatesimp/distance_oracle.hpp"
#include "gatesimp/gate_graph.hpp"
#include "gatesimp/gates.hpp"
#include "gatesimp/generators.hpp"
#include "gatesimp/graph.hpp"
#include "gatesimp/report.hpp"
#include "gatesimp/set_cover_solver.hpp"
#include "gatesimp/verify.hpp"
