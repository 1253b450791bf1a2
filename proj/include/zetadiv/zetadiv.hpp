#pragma once

// Umbrella header: exact zeta-function and divisor-class computations for
// curves over small finite fields.

#include "zetadiv/common.hpp"
#include "zetadiv/criteria.hpp"
#include "zetadiv/curve.hpp"
#include "zetadiv/density.hpp"
#include "zetadiv/divisor_counts.hpp"
#include "zetadiv/field.hpp"
#include "zetadiv/fpoly.hpp"
#include "zetadiv/harness.hpp"
#include "zetadiv/hyperelliptic.hpp"
#include "zetadiv/io.hpp"
#include "zetadiv/lpoly.hpp"
#include "zetadiv/sqrt_rational.hpp"
