#pragma once

#include "vlp/analysis.hpp"
#include "vlp/circle.hpp"
#include "vlp/counts.hpp"
#include "vlp/error.hpp"
#include "vlp/fields.hpp"
#include "vlp/perron.hpp"
#include "vlp/sieve.hpp"
#include "vlp/zeta.hpp"
