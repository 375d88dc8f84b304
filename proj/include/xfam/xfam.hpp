#pragma once

#include "xfam/closure.hpp"
#include "xfam/compression.hpp"
#include "xfam/constructions.hpp"
#include "xfam/exact.hpp"
#include "xfam/family_io.hpp"
#include "xfam/genset.hpp"
#include "xfam/inequalities.hpp"
#include "xfam/poly.hpp"
#include "xfam/search.hpp"
#include "xfam/sets.hpp"
