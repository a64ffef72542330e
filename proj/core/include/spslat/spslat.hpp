#pragma once

#include "spslat/canonical.hpp"
#include "spslat/congruence.hpp"
#include "spslat/diagram.hpp"
#include "spslat/error.hpp"
#include "spslat/generators.hpp"
#include "spslat/json_io.hpp"
#include "spslat/lattice.hpp"
#include "spslat/poset.hpp"
#include "spslat/render.hpp"
#include "spslat/swing.hpp"
