#pragma once

#include <cstddef>
#include <vector>

#include "clab/errors.hpp"

namespace clab {

// Row-major dense matrix of doubles. Just enough tensor math for an MLP.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }

    double* row_ptr(std::size_t r) { return v.data() + r * cols; }
    const double* row_ptr(std::size_t r) const { return v.data() + r * cols; }

    std::size_t size() const { return v.size(); }

    void fill(double x) { v.assign(v.size(), x); }
};

// out = a * b
inline Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw ShapeError("matmul: inner dimensions differ");
    Mat out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ar = a.row_ptr(i);
        double* or_ = out.row_ptr(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = ar[k];
            if (aik == 0.0) continue;
            const double* br = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols; ++j) or_[j] += aik * br[j];
        }
    }
    return out;
}

// out = a * b^T
inline Mat matmul_bt(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw ShapeError("matmul_bt: inner dimensions differ");
    Mat out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ar = a.row_ptr(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* br = b.row_ptr(j);
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) acc += ar[k] * br[k];
            out.at(i, j) = acc;
        }
    }
    return out;
}

// out = a^T * b
inline Mat matmul_at(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw ShapeError("matmul_at: inner dimensions differ");
    Mat out(a.cols, b.cols);
    for (std::size_t k = 0; k < a.rows; ++k) {
        const double* ar = a.row_ptr(k);
        const double* br = b.row_ptr(k);
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double aki = ar[i];
            if (aki == 0.0) continue;
            double* or_ = out.row_ptr(i);
            for (std::size_t j = 0; j < b.cols; ++j) or_[j] += aki * br[j];
        }
    }
    return out;
}

}  // namespace clab
