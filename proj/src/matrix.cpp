#include "goldentiles/matrix.hpp"

namespace goldentiles {

GoldenMatrix to_golden(const RationalMatrix& m) {
    GoldenMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = GoldenNumber(m(i, j));
    return out;
}

bool try_to_rational(const GoldenMatrix& m, RationalMatrix* out) {
    RationalMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational()) return false;
            r(i, j) = m(i, j).a;
        }
    if (out) *out = r;
    return true;
}

} // namespace goldentiles
