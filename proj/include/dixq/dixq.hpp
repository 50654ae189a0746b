#pragma once

#include "rational.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "series.hpp"
#include "interp.hpp"
#include "quadext.hpp"
#include "fields.hpp"
#include "curve.hpp"
#include "spectral.hpp"
#include "diffop.hpp"
#include "builder.hpp"
#include "bc.hpp"
#include "eigen.hpp"
#include "parser.hpp"
#include "format.hpp"
#include "golden.hpp"
