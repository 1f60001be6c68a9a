#pragma once

#include "nullcone/catalog.hpp"
#include "nullcone/cli.hpp"
#include "nullcone/engine.hpp"
#include "nullcone/oracle.hpp"
#include "nullcone/problem_json.hpp"
#include "nullcone/report.hpp"
#include "nullcone/svg.hpp"
