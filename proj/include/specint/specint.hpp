#pragma once

// Umbrella header: the full specint library.

#include "specint/constructions.hpp"
#include "specint/family.hpp"
#include "specint/height.hpp"
#include "specint/intset.hpp"
#include "specint/numbertheory.hpp"
#include "specint/numeric.hpp"
#include "specint/procedure.hpp"
#include "specint/report.hpp"
#include "specint/rng.hpp"
#include "specint/search.hpp"
#include "specint/surd.hpp"
#include "specint/verify.hpp"
#include "specint/version.hpp"
