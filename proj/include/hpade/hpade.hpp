#pragma once

// Exact Hermite-Pade toolkit for the exponential function: sparse
// multivariate polynomials over Z and Q, fraction-free linear algebra,
// generalized Vandermonde block determinants, the classical and twin
// simultaneous approximation systems, minor-gcd common factors, and
// Siegel-type kernel bounds.

#include "hpade/errors.hpp"
#include "hpade/integers.hpp"
#include "hpade/linalg.hpp"
#include "hpade/matrix.hpp"
#include "hpade/monomial.hpp"
#include "hpade/poly_format.hpp"
#include "hpade/poly_gcd.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/rational_poly.hpp"
#include "hpade/series.hpp"
#include "hpade/siegel.hpp"
#include "hpade/tame.hpp"
#include "hpade/vandermonde.hpp"
#include "hpade/wild.hpp"
