#pragma once

// Umbrella header.

#include "mtop/dsl.hpp"
#include "mtop/embed.hpp"
#include "mtop/enumerate.hpp"
#include "mtop/errors.hpp"
#include "mtop/eval.hpp"
#include "mtop/example1.hpp"
#include "mtop/fmt.hpp"
#include "mtop/identity.hpp"
#include "mtop/json.hpp"
#include "mtop/mset.hpp"
#include "mtop/pairset.hpp"
#include "mtop/search.hpp"
#include "mtop/topology.hpp"
#include "mtop/universe.hpp"
