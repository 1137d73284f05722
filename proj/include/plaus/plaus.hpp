#pragma once

// Umbrella header.

#include "plaus/canonical.hpp"
#include "plaus/cli.hpp"
#include "plaus/continuum.hpp"
#include "plaus/formula.hpp"
#include "plaus/plausibility.hpp"
#include "plaus/rational.hpp"
#include "plaus/requirements.hpp"
#include "plaus/semantics.hpp"
