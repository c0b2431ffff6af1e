#pragma once

// Umbrella header for the whole library.

#include "sheafreg/betti.hpp"
#include "sheafreg/bott.hpp"
#include "sheafreg/catalog.hpp"
#include "sheafreg/chow.hpp"
#include "sheafreg/cohtable.hpp"
#include "sheafreg/integers.hpp"
#include "sheafreg/les.hpp"
#include "sheafreg/liaison.hpp"
#include "sheafreg/polynomial.hpp"
#include "sheafreg/quadric.hpp"
#include "sheafreg/regularity.hpp"
#include "sheafreg/sheaf_expr.hpp"
