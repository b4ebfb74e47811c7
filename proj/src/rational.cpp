#include "goldentiles/rational.hpp"

#include <stdexcept>

namespace goldentiles {

Int floor_int(const Rational& q) {
    Int n = num(q), d = den(q);
    Int quo = n / d; // truncates toward zero
    if (n < 0 && quo * d != n) quo -= 1;
    return quo;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rational(p) / Rational(q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string rational_str(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = sqrt(n); // GMP integer sqrt (floor)
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(num(q), &rn)) return std::nullopt;
    if (!is_perfect_square(den(q), &rd)) return std::nullopt;
    return Rational(rn) / Rational(rd);
}

} // namespace goldentiles
