#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hfpim/errors.hpp"
#include "hfpim/rng.hpp"

namespace hfpim {

// Row-major dense real matrix. The workhorse value type of the software
// pipeline (decomposition, fine-tuning); crossbar simulation operates on
// the quantized types in quant.hpp instead.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols, a.rows);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c) t(c, r) = a(r, c);
    return t;
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw InvalidInput("matmul: inner dimensions differ");
    DenseMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
    if (a.cols != x.size()) throw InvalidInput("matvec: dimension mismatch");
    std::vector<double> y(a.rows, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

// yᵀ = xᵀ·A, i.e. A transposed applied to x
inline std::vector<double> matvec_t(const DenseMatrix& a, const std::vector<double>& x) {
    if (a.rows != x.size()) throw InvalidInput("matvec_t: dimension mismatch");
    std::vector<double> y(a.cols, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols; ++j) y[j] += xi * a(i, j);
    }
    return y;
}

inline double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return std::sqrt(s);
}

inline double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw InvalidInput("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (double v : a.data) m = std::max(m, std::abs(v));
    return m;
}

inline DenseMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
    DenseMatrix m(rows, cols);
    for (double& v : m.data) v = rng.normal();
    return m;
}

}  // namespace hfpim
