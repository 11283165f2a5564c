#ifndef PARASTD_PARASTD_HPP
#define PARASTD_PARASTD_HPP

#include "parastd/errors.hpp"
#include "parastd/exponent.hpp"
#include "parastd/order.hpp"
#include "parastd/polynomial.hpp"
#include "parastd/ascalar.hpp"
#include "parastd/param_scalar.hpp"
#include "parastd/division.hpp"
#include "parastd/buchberger.hpp"
#include "parastd/param_poly.hpp"
#include "parastd/staircase.hpp"
#include "parastd/genstd.hpp"
#include "parastd/comprehensive.hpp"
#include "parastd/hilbert.hpp"
#include "parastd/format.hpp"
#include "parastd/parser.hpp"

#endif  // PARASTD_PARASTD_HPP
