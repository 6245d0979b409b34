#pragma once

// Umbrella header for the whole library.

#include "fptate/basis.hpp"
#include "fptate/errors.hpp"
#include "fptate/fp.hpp"
#include "fptate/grading.hpp"
#include "fptate/hochschild.hpp"
#include "fptate/linalg.hpp"
#include "fptate/monomial.hpp"
#include "fptate/presentation.hpp"
#include "fptate/presets.hpp"
#include "fptate/report.hpp"
#include "fptate/singer.hpp"
#include "fptate/tate.hpp"
#include "fptate/version.hpp"
