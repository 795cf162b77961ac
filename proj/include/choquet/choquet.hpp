#pragma once

#include "choquet/aggregation.hpp"
#include "choquet/errors.hpp"
#include "choquet/hypermeasure.hpp"
#include "choquet/integral.hpp"
#include "choquet/measures.hpp"
#include "choquet/moebius.hpp"
#include "choquet/setcore.hpp"
