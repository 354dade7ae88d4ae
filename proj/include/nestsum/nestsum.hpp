#pragma once

#include "nestsum/error.hpp"
#include "nestsum/exact.hpp"
#include "nestsum/nested_sum.hpp"
#include "nestsum/polynomial.hpp"
#include "nestsum/saras.hpp"
