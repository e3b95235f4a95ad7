#pragma once

// umbrella header

#include "geograph/audit.hpp"
#include "geograph/chains.hpp"
#include "geograph/construct.hpp"
#include "geograph/generate.hpp"
#include "geograph/geometry.hpp"
#include "geograph/halving.hpp"
#include "geograph/io.hpp"
#include "geograph/orientation.hpp"
#include "geograph/rational.hpp"
