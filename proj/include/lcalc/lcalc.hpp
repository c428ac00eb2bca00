#pragma once

#include "doubling.hpp"
#include "factored.hpp"
#include "kcorbits.hpp"
#include "laurent.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "satake.hpp"
#include "series.hpp"
#include "symmfunc.hpp"
#include "textio.hpp"
#include "variables.hpp"
#include "verify.hpp"
