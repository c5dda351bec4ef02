#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "luinv/state.hpp"

namespace test_helpers {

using luinv::cd;

inline bool close(cd a, cd b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
inline bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

// Kronecker product of square row-major matrices.
inline std::vector<cd> kron(const std::vector<cd>& a, std::size_t da, const std::vector<cd>& b,
                            std::size_t db) {
    std::vector<cd> r(da * db * da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    r[(i * db + k) * da * db + (j * db + l)] = a[i * da + j] * b[k * db + l];
    return r;
}

inline std::vector<cd> matvec(const std::vector<cd>& m, const std::vector<cd>& v) {
    const std::size_t d = v.size();
    std::vector<cd> r(d, cd{0});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r[i] += m[i * d + j] * v[j];
    return r;
}

inline std::vector<cd> local_to_vec(const luinv::LocalMatrix& m) {
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

// Largest entrywise |a-b| after aligning global phase on the first entry
// of `a` whose modulus exceeds 1e-9.
inline double phase_aligned_distance(const std::vector<cd>& a, const std::vector<cd>& b) {
    cd phase{1.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) > 1e-9) {
            if (std::abs(b[i]) < 1e-15) return 1.0;
            phase = (b[i] / a[i]) / std::abs(b[i] / a[i]);
            break;
        }
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] * phase - b[i]));
    return d;
}

}  // namespace test_helpers
