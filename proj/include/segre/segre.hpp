#pragma once

#include "segre/chow.hpp"
#include "segre/degrees.hpp"
#include "segre/errors.hpp"
#include "segre/intersect.hpp"
#include "segre/invariants.hpp"
#include "segre/poly.hpp"
#include "segre/problem.hpp"
#include "segre/random.hpp"
#include "segre/render.hpp"
#include "segre/segre_class.hpp"
#include "segre/zerodim.hpp"
