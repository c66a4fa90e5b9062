#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hfpim/matrix.hpp"
#include "hfpim/quant.hpp"

namespace hfpim::xbar {

// SLC stores one bit per cell, MLC2 packs two (cell values 0..3).
enum class CellMode { Slc, Mlc2 };

inline int bits_per_cell(CellMode m) { return m == CellMode::Slc ? 1 : 2; }

// 8-bit words occupy 8 column slices in SLC, 4 in MLC2.
inline int slices_per_word(CellMode m) { return 8 / bits_per_cell(m); }

constexpr std::size_t kTileRows = 64;
constexpr std::size_t kTileCols = 128;

// words that fit in one 128-column tile row: 16 (SLC) or 32 (MLC2)
inline std::size_t tile_word_capacity(CellMode m, std::size_t phys_cols = kTileCols) {
    return phys_cols / static_cast<std::size_t>(slices_per_word(m));
}

// ADC precision needed for an exact column sum: ⌈log₂R⌉ + w − 1.
int adc_bits(std::size_t rows, int bits_per_cell);

// Multiplicative programming noise: read conductance = ideal × (1 + η).
struct NoiseSpec {
    enum class Placement { PerWeight, PerCell };
    double sigma = 0.0;
    Placement placement = Placement::PerWeight;
    std::uint64_t seed = 0;
};

// Saturating quantizer shared by the tile columns. Conversions are
// counted here so cost accounting can read them back.
struct AdcModel {
    int bits = 6;
    std::uint64_t conversions = 0;

    int saturation_code() const { return (1 << bits) - 1; }
};

inline AdcModel adc_for(CellMode m, std::size_t rows = kTileRows) {
    return AdcModel{adc_bits(rows, bits_per_cell(m)), 0};
}

// One programmed 64×128 array holding up to capacity words across up to
// 64 logical rows. Cells store the ideal level; noise holds the (1+η)
// factor per logical weight (PerWeight) or per cell (PerCell).
struct CrossbarTile {
    CellMode mode = CellMode::Slc;
    std::size_t rows_used = 0;
    std::size_t words = 0;
    bool protected_slc = false;  // noise-free by construction
    NoiseSpec::Placement placement = NoiseSpec::Placement::PerWeight;
    std::vector<std::uint8_t> cells;  // [rows_used][words × slices]
    std::vector<double> noise;        // [rows_used][words] or [rows_used][words × slices]

    int slices() const { return slices_per_word(mode); }

    std::uint8_t cell(std::size_t r, std::size_t word, int slice) const {
        return cells[r * (words * static_cast<std::size_t>(slices())) +
                     word * static_cast<std::size_t>(slices()) + static_cast<std::size_t>(slice)];
    }

    double noise_factor(std::size_t r, std::size_t word, int slice) const {
        if (placement == NoiseSpec::Placement::PerWeight) return noise[r * words + word];
        return noise[r * (words * static_cast<std::size_t>(slices())) +
                     word * static_cast<std::size_t>(slices()) + static_cast<std::size_t>(slice)];
    }
};

// Program one tile from a block of offset-encoded words (rows ≤ 64,
// words ≤ capacity). protected_slc tiles carry unit noise factors; other
// tiles draw η ~ N(0, σ²) from a stream keyed by (spec.seed, tile_index).
CrossbarTile program_tile(const quant::OffsetMatrix& block, CellMode mode,
                          const NoiseSpec& spec, bool protected_slc,
                          std::uint64_t tile_index = 0);

struct SaturationReport {
    std::uint64_t clipped = 0;
    std::uint64_t conversions = 0;
};

struct GemvResult {
    std::vector<std::int64_t> values;  // per word, offset-corrected signed result
    SaturationReport saturation;
};

// Bit-serial GEMV over a chain of row-tiles that share the same word
// layout. Input bits stream LSB-first; cycle 7 carries the two's
// complement weight −128. Per column the analog sum is converted by the
// ADC, recombined by shift-and-add, and partial sums across row-tiles
// accumulate exactly in digital registers. The offset correction
// −128·Σx is applied at the end. With σ = 0 and no clipped conversions
// the result equals the exact signed integer GEMV.
GemvResult bitserial_gemv(std::span<const CrossbarTile> row_chain,
                          const quant::QuantVector& x, AdcModel& adc);

// Analytic read-error model: cell levels equispaced in normalized
// conductance [1/on_off_ratio, 1]; an error is a crossing of the midpoint
// to an adjacent level under multiplicative Gaussian noise.
double ber_model(double sigma, CellMode mode, double on_off_ratio = 150.0);

// Invert ber_model by bisection on σ ∈ [0, 2] to |BER − target| ≤ 1e-9.
double calibrate_sigma(double target_ber, CellMode mode, double on_off_ratio = 150.0);

// W̃ = W ⊙ (1 + η), η ~ N(0, σ²), deterministic per seed.
DenseMatrix apply_weight_noise(const DenseMatrix& w, double sigma, std::uint64_t seed);

// Digital NOR-PIM cost constants for one INT8×INT8 output.
struct NorCost {
    std::uint64_t nor_ops = 0;
    std::uint64_t columns = 0;  // 3 per NOR
    std::uint64_t cycles = 0;   // 5 per row-operation (4 write + 1 read)
};

struct NorProduct {
    std::uint16_t product = 0;
    NorCost cost;
    std::uint64_t netlist_gates = 0;  // NOR gates actually evaluated
};

// 8×8 multiply lowered entirely to NOR gates; the cost fields use the
// fixed accounting (64 NORs, 3 columns each, 5 cycles per row-op).
NorProduct nor_multiply(std::uint8_t a, std::uint8_t b);

// GEMV/SFU balance point: arrays×row_bits/(64×3)/5, floored.
std::uint64_t sfu_balance(std::uint64_t arrays, std::uint64_t row_bits);

}  // namespace hfpim::xbar
