#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hfpim/matrix.hpp"

namespace hfpim::svd {

// Factored form of a weight matrix: W ≈ u · diag(sigma) · vᵀ.
// u is M×k, v is N×k, sigma holds k non-increasing singular values.
// grad_sigma carries the accumulated |∂L/∂σ_r| once a factor has been
// through fine-tuning (empty before that).
struct SvdFactor {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;
    std::vector<double> grad_sigma;

    std::size_t rank() const { return sigma.size(); }
};

// Full-rank decomposition with a deterministic sign convention: the first
// nonzero entry of every u-column is non-negative. Postcondition
// ‖U·diag(σ)·Vᵀ − W‖_F ≤ tol·‖W‖_F is verified before returning.
SvdFactor decompose(const DenseMatrix& w, double tol = 1e-8);

// Rank preserving the pre-decomposition MAC/parameter count:
// floor(d1·d2 / (d1+d2)). May be 0 for extreme aspect ratios; callers
// clamp with min_rank.
std::size_t hard_threshold_rank(std::size_t d1, std::size_t d2);

// hard_threshold_rank clamped below by min_rank.
std::size_t clamped_rank(std::size_t d1, std::size_t d2, std::size_t min_rank = 1);

// Keep the first k singular triplets. The discarded tail fixes the exact
// reconstruction error: ‖W − W_k‖_F = sqrt(Σ_{r>k} σ_r²).
SvdFactor truncate(const SvdFactor& f, std::size_t k);

// b = diag(σ)·Vᵀ (k×N). Row r of b and column r of u belong to rank r;
// that correspondence is what protection plans operate on.
struct MergedFactor {
    DenseMatrix b;  // k×N
    DenseMatrix u;  // M×k
};
MergedFactor merge_sigma_vt(const SvdFactor& f);

// U·diag(σ)·Vᵀ, densified.
DenseMatrix reconstruct(const SvdFactor& f);

// sqrt(Σ_{r>=k} σ_r²) over the discarded tail of a full factor.
double tail_energy(const std::vector<double>& sigma, std::size_t k);

}  // namespace hfpim::svd
