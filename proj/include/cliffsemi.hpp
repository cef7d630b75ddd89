#pragma once

/// @file cliffsemi.hpp
/// @brief Umbrella header for the cliffsemi library.

#include "cliffsemi/error.hpp"
#include "cliffsemi/report.hpp"
#include "cliffsemi/scroll.hpp"
#include "cliffsemi/semigroup.hpp"
#include "cliffsemi/sheaf.hpp"
#include "cliffsemi/solvers.hpp"
