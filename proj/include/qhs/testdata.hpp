#ifndef QHS_TESTDATA_HPP
#define QHS_TESTDATA_HPP

#include "qhs/datum.hpp"

namespace qhs {

/// Bundled data covering every generator-action case and both quantum Serre
/// regimes.

/// i odd real, j odd imaginary with a_jj = -2, a_ij = a_ji = -2, r = (1, 1).
inline Superdatum datum_rank2_super() {
    return Superdatum({{"i", 1, 1}, {"j", 1, 1}}, {{2, -2}, {-2, -2}});
}

/// Two even real vertices with a_ij = a_ji = -1, r = (1, 1).
inline Superdatum datum_rank2_even() {
    return Superdatum({{"i", 0, 1}, {"j", 0, 1}}, {{2, -1}, {-1, 2}});
}

/// l even imaginary isotropic, m odd real, o odd imaginary, with an
/// orthogonal odd-odd pair (m, o) and mixed symmetrizers.
inline Superdatum datum_rank3_mixed() {
    return Superdatum({{"l", 0, 1}, {"m", 1, 1}, {"o", 1, 2}},
                      {{0, -2, -4}, {-2, 2, 0}, {-2, 0, -4}});
}

inline std::vector<Superdatum> bundled_data() {
    return {datum_rank2_super(), datum_rank2_even(), datum_rank3_mixed()};
}

inline std::vector<std::string> bundled_names() { return {"rank2-super", "rank2-even", "rank3-mixed"}; }

}  // namespace qhs

#endif
