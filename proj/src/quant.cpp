#include "hfpim/quant.hpp"

#include <cmath>

namespace hfpim::quant {

namespace {

// round half to even, the default FP rounding mode
double round_even(double v) { return std::nearbyint(v); }

std::int8_t clamp_i8(double v) {
    if (v > 127.0) return 127;
    if (v < -128.0) return -128;
    return static_cast<std::int8_t>(v);
}

}  // namespace

QuantMatrix quantize(const DenseMatrix& m) {
    if (!m.all_finite()) throw InvalidInput("quantize: non-finite input");
    QuantMatrix q;
    q.rows = m.rows;
    q.cols = m.cols;
    q.data.resize(m.data.size());
    const double amax = max_abs(m);
    q.scale = amax == 0.0 ? 1.0 : amax / 127.0;
    for (std::size_t i = 0; i < m.data.size(); ++i)
        q.data[i] = clamp_i8(round_even(m.data[i] / q.scale));
    return q;
}

QuantVector quantize(const std::vector<double>& x) {
    QuantVector q;
    q.data.resize(x.size());
    double amax = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) throw InvalidInput("quantize: non-finite input");
        amax = std::max(amax, std::abs(v));
    }
    q.scale = amax == 0.0 ? 1.0 : amax / 127.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        q.data[i] = clamp_i8(round_even(x[i] / q.scale));
    return q;
}

DenseMatrix dequantize(const QuantMatrix& q) {
    DenseMatrix m(q.rows, q.cols);
    for (std::size_t i = 0; i < q.data.size(); ++i)
        m.data[i] = q.scale * static_cast<double>(q.data[i]);
    return m;
}

std::vector<double> dequantize(const QuantVector& q) {
    std::vector<double> x(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        x[i] = q.scale * static_cast<double>(q.data[i]);
    return x;
}

OffsetMatrix offset_encode(const QuantMatrix& q) {
    OffsetMatrix o;
    o.rows = q.rows;
    o.cols = q.cols;
    o.data.resize(q.data.size());
    for (std::size_t i = 0; i < q.data.size(); ++i)
        o.data[i] = static_cast<std::uint8_t>(static_cast<int>(q.data[i]) + 128);
    return o;
}

}  // namespace hfpim::quant
