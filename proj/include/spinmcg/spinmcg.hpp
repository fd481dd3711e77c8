#pragma once

#include "ring.hpp"
#include "surface.hpp"
#include "twist_word.hpp"
#include "rspin.hpp"
#include "pin.hpp"
#include "orbits.hpp"
#include "gluing.hpp"
#include "verify.hpp"
