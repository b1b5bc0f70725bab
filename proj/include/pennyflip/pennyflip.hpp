#pragma once

#include "pennyflip/classical.hpp"
#include "pennyflip/entanglement.hpp"
#include "pennyflip/errors.hpp"
#include "pennyflip/game.hpp"
#include "pennyflip/linalg.hpp"
#include "pennyflip/quantum.hpp"
#include "pennyflip/sweep.hpp"
