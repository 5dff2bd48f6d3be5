#pragma once

// Everything in one include.

#include "binsum/errors.hpp"
#include "binsum/number.hpp"
#include "binsum/combinatorics.hpp"
#include "binsum/hypergeometric.hpp"
#include "binsum/sequences.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational_gf.hpp"
#include "binsum/expression.hpp"
#include "binsum/genfunc.hpp"
#include "binsum/recurrence.hpp"
#include "binsum/tables.hpp"
#include "binsum/bfile.hpp"
#include "binsum/oeis.hpp"
#include "binsum/report.hpp"
#include "binsum/oeis_mapping.hpp"
#include "binsum/verify.hpp"
