#pragma once

#include "ffcalc/numeric.hpp"
#include "ffcalc/poly.hpp"
#include "ffcalc/symmetric.hpp"
#include "ffcalc/combinations.hpp"
#include "ffcalc/missing_factor.hpp"
#include "ffcalc/stirling.hpp"
#include "ffcalc/harmonic.hpp"
#include "ffcalc/derivative.hpp"
#include "ffcalc/identities.hpp"
