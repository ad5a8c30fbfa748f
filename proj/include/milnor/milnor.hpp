#pragma once

#include "milnor/colength_oracle.hpp"
#include "milnor/error.hpp"
#include "milnor/invariants.hpp"
#include "milnor/morsify.hpp"
#include "milnor/parser.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/standard_basis.hpp"
#include "milnor/strata.hpp"
#include "milnor/report.hpp"
