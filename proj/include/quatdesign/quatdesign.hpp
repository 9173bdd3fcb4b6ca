#pragma once

// Umbrella header.

#include "exactnum.hpp"
#include "poly.hpp"
#include "quat.hpp"
#include "parallel.hpp"
#include "groups.hpp"
#include "gegenbauer.hpp"
#include "strength.hpp"
#include "lpbound.hpp"
#include "budget.hpp"
#include "orders.hpp"
#include "mpoly.hpp"
#include "theta.hpp"
#include "io.hpp"
#include "verify.hpp"
