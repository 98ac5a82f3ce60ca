#pragma once

// Everything in one include.

#include "waning/descriptors.hpp"
#include "waning/errors.hpp"
#include "waning/ext_nat.hpp"
#include "waning/io.hpp"
#include "waning/partial_bijection.hpp"
#include "waning/poset.hpp"
#include "waning/suites.hpp"
#include "waning/topology.hpp"
#include "waning/universe.hpp"
#include "waning/waning_function.hpp"
#include "waning/witnesses.hpp"
