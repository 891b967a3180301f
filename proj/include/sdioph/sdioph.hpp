#pragma once

#include "bounds.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "primality.hpp"
#include "prime_set.hpp"
#include "smooth.hpp"
#include "sunit_solver.hpp"
#include "sunit_system.hpp"
#include "tuple_search.hpp"
