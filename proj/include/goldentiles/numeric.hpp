#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "goldentiles/golden.hpp"
#include "goldentiles/tower.hpp"

namespace goldentiles {

/// Arbitrary-precision float used for all inexact work (root isolation
/// prescreens, angle identification, reported decimals). Precision is set
/// process-wide from the environment variable GOLDENTILES_PRECISION_BITS
/// (default 128 bits, clamped to at least 80).
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

/// Bits of working precision currently in effect.
unsigned precision_bits();

/// Ensure the process default precision is initialised (idempotent; called
/// implicitly by the converters below).
void init_precision();

Real to_real(const Rational& q);
Real to_real(const GoldenNumber& g);
Real to_real(const TowerElement& t);

const Real& real_pi();
const Real& real_tau();
const Real& real_rho();   // sqrt(tau + 2)
const Real& real_sqrt3();
const Real& real_sqrt5();

/// |x| < 10^-12 convenience used by numeric prescreens and reports.
bool near_zero(const Real& x);

/// Fixed-point decimal with 15 fractional digits (round-trip stable for the
/// comparisons the command-line output makes).
std::string real_str(const Real& x);

} // namespace goldentiles
