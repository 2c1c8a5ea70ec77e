#pragma once

#include <vector>

#include "rescoh/linalg.hpp"

namespace testing_helpers {

inline std::vector<std::vector<std::int64_t>> to_rows(const rescoh::FpMatrix& m) {
    std::vector<std::vector<std::int64_t>> rows(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    return rows;
}

}  // namespace testing_helpers
