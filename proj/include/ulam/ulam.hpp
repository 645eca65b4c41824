#pragma once

#include "ulam/count.hpp"
#include "ulam/permutation.hpp"
#include "ulam/tableau.hpp"
#include "ulam/rsk.hpp"
#include "ulam/hooks.hpp"
#include "ulam/protected.hpp"
#include "ulam/paths.hpp"
#include "ulam/injections.hpp"
#include "ulam/enumerate.hpp"
#include "ulam/census.hpp"
#include "ulam/verify.hpp"
#include "ulam/io.hpp"
