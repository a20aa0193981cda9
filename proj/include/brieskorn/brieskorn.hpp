#pragma once

// Umbrella header for the whole library.

#include "arith.hpp"
#include "error.hpp"
#include "family.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "manolescu.hpp"
#include "obstruction.hpp"
#include "plumbing.hpp"
#include "record.hpp"
#include "seifert.hpp"
#include "selftest.hpp"
