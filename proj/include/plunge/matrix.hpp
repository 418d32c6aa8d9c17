// matrix.hpp
// Minimal dense row-major matrix of doubles. Panels here are at most a few
// thousand rows by a dozen or so columns, so no BLAS backing is needed.

#pragma once

#include <cstddef>
#include <vector>

namespace plunge {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Bitwise comparison; used by determinism and round-trip checks.
    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace plunge
