#pragma once

// Hand-rolled generators for the property tests. Each property runs a fixed
// number of cases from its own seed so failures replay exactly.

#include <doctest.h>

#include "matinv/matrix.hpp"

namespace doctest {

template <>
struct StringMaker<matinv::Mat2> {
    static String convert(const matinv::Mat2& m) {
        const std::string text = "[[" + m(0, 0).to_string() + ", " + m(0, 1).to_string() + "], [" +
                                 m(1, 0).to_string() + ", " + m(1, 1).to_string() + "]]";
        return text.c_str();
    }
};

}  // namespace doctest

namespace gen {

inline constexpr int kCases = 200;

inline matinv::RandomStream stream(std::uint64_t seed) { return matinv::RandomStream(seed); }

inline matinv::MatrixX random_matrix(matinv::RandomStream& rng, int rows, int cols, long bound = 5,
                                     bool sparse = false) {
    matinv::MatrixX m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m(r, c) = sparse && rng.coin() ? matinv::GaussianRational() : rng.gaussian(bound);
        }
    }
    return m;
}

inline matinv::Mat2 upper_triangular(matinv::RandomStream& rng, long bound = 10) {
    return matinv::make_mat2(rng.gaussian(bound), rng.gaussian(bound), 0, rng.gaussian(bound));
}

}  // namespace gen
