#pragma once

#include <cstdint>
#include <vector>

#include "hfpim/matrix.hpp"

namespace hfpim::quant {

// Symmetric per-tensor INT8: real_value = scale × int_value.
struct QuantMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int8_t> data;  // row-major
    double scale = 1.0;

    std::int8_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int8_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct QuantVector {
    std::vector<std::int8_t> data;
    double scale = 1.0;

    std::size_t size() const { return data.size(); }
};

// Offset-binary view of a quantized matrix: cell words w' = w + 128 are
// non-negative; the signed result is recovered digitally as
// y_true = y_encoded − 128·Σ_i a_i.
struct OffsetMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;  // row-major, w + 128

    std::uint8_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// scale = max|m| / 127 (1.0 for an all-zero input), round half to even.
QuantMatrix quantize(const DenseMatrix& m);
QuantVector quantize(const std::vector<double>& x);

DenseMatrix dequantize(const QuantMatrix& q);
std::vector<double> dequantize(const QuantVector& q);

OffsetMatrix offset_encode(const QuantMatrix& q);

// Digital correction applied after an offset-encoded accumulation.
// sum_inputs = Σ_i a_i over the true signed inputs.
inline std::int64_t offset_correct(std::int64_t encoded, std::int64_t sum_inputs) {
    return encoded - 128 * sum_inputs;
}

}  // namespace hfpim::quant
