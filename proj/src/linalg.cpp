#include "qhs/linalg.hpp"

#include <stdexcept>

namespace qhs {

int rank_rational(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        Rat inv = 1 / m[rank][c];
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] * inv;
            for (size_t k = c; k < cols; ++k) {
                m[r][k] -= f * m[rank][k];
                m[r][k].canonicalize();
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_laurent(std::vector<std::vector<Laurent>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    Laurent prev = Laurent::one();
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        // Bareiss step: m[r][k] <- (m[rank][c] m[r][k] - m[r][c] m[rank][k]) / prev
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t k = cols; k-- > c + 1;) {
                Laurent num = m[rank][c] * m[r][k] - m[r][c] * m[rank][k];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("rank_laurent: fraction-free division failed");
                m[r][k] = *q;
            }
            m[r][c] = Laurent::zero();
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_rational_scalar(const std::vector<std::vector<RationalScalar>>& m, int pi_sign) {
    std::vector<std::vector<Laurent>> cleared;
    cleared.reserve(m.size());
    for (const auto& row : m) {
        Laurent common = Laurent::one();
        std::vector<RationalScalar> spec;
        spec.reserve(row.size());
        for (const auto& x : row) {
            RationalScalar s = x.specialize(pi_sign);
            spec.push_back(s);
            Laurent g = laurent_gcd(common, s.den());
            auto q = divide_exact(s.den(), g);
            common = common * *q;  // lcm accumulation
        }
        std::vector<Laurent> out;
        out.reserve(row.size());
        for (const auto& s : spec) {
            auto q = divide_exact(common, s.den());
            if (!q) throw std::logic_error("rank_rational_scalar: lcm clearing failed");
            out.push_back(s.num().even_part() * *q);
        }
        cleared.push_back(std::move(out));
    }
    return rank_laurent(std::move(cleared));
}

}  // namespace qhs
