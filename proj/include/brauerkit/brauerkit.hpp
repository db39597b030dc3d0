#pragma once

#include "brauerkit/fp.hpp"
#include "brauerkit/poly.hpp"
#include "brauerkit/places.hpp"
#include "brauerkit/rational.hpp"
#include "brauerkit/qmodz.hpp"
#include "brauerkit/characters.hpp"
#include "brauerkit/brauer_global.hpp"
#include "brauerkit/brauer_complete.hpp"
#include "brauerkit/lift.hpp"
#include "brauerkit/constructions.hpp"
