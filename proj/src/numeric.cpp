#include "goldentiles/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <sstream>

namespace goldentiles {

namespace {

unsigned g_bits = 0;

unsigned read_bits_from_env() {
    const char* env = std::getenv("GOLDENTILES_PRECISION_BITS");
    unsigned bits = 128;
    if (env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) bits = static_cast<unsigned>(v);
    }
    if (bits < 80) bits = 80;
    return bits;
}

std::once_flag g_once;

void do_init() {
    g_bits = read_bits_from_env();
    // digits10 large enough that the backend allocates >= g_bits mantissa bits
    unsigned digits = static_cast<unsigned>(std::ceil(g_bits * 0.30103)) + 2;
    Real::default_precision(digits);
}

} // namespace

void init_precision() { std::call_once(g_once, do_init); }

unsigned precision_bits() {
    init_precision();
    return g_bits;
}

Real to_real(const Rational& q) {
    init_precision();
    return Real(num(q).str()) / Real(den(q).str());
}

Real to_real(const GoldenNumber& g) {
    return to_real(g.a) + to_real(g.b) * real_tau();
}

Real to_real(const TowerElement& t) {
    return to_real(t.w) + to_real(t.x) * real_rho() +
           (to_real(t.y) + to_real(t.z) * real_rho()) * real_sqrt3();
}

const Real& real_pi() {
    init_precision();
    static const Real v = 4 * atan(Real(1));
    return v;
}

const Real& real_sqrt5() {
    init_precision();
    static const Real v = sqrt(Real(5));
    return v;
}

const Real& real_tau() {
    init_precision();
    static const Real v = (Real(1) + real_sqrt5()) / 2;
    return v;
}

const Real& real_rho() {
    init_precision();
    static const Real v = sqrt(real_tau() + 2);
    return v;
}

const Real& real_sqrt3() {
    init_precision();
    static const Real v = sqrt(Real(3));
    return v;
}

bool near_zero(const Real& x) {
    static const Real tol("1e-12");
    return abs(x) < tol;
}

std::string real_str(const Real& x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(15) << x;
    return os.str();
}

} // namespace goldentiles
