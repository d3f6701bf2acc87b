#pragma once

/// Umbrella header for the recmat library.

#include "recmat/rational.hpp"
#include "recmat/poly.hpp"
#include "recmat/series.hpp"
#include "recmat/triangle.hpp"
#include "recmat/identities.hpp"
#include "recmat/oracle.hpp"
#include "recmat/catalog.hpp"
#include "recmat/io.hpp"
#include "recmat/suites.hpp"
