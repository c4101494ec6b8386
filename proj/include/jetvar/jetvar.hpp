// Umbrella header.
#pragma once

#include "jetvar/calculus.hpp"
#include "jetvar/commands.hpp"
#include "jetvar/error.hpp"
#include "jetvar/expr.hpp"
#include "jetvar/jet_space.hpp"
#include "jetvar/jetops.hpp"
#include "jetvar/multiindex.hpp"
#include "jetvar/numcheck.hpp"
#include "jetvar/parse.hpp"
#include "jetvar/problem.hpp"
#include "jetvar/rational.hpp"
#include "jetvar/render.hpp"
#include "jetvar/sections.hpp"
#include "jetvar/varcalc.hpp"
#include "jetvar/vform.hpp"
