#include "hfpim/svd.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace hfpim::svd {

namespace {

Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
    Eigen::MatrixXd e(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    return e;
}

DenseMatrix from_eigen(const Eigen::MatrixXd& e) {
    DenseMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index r = 0; r < e.rows(); ++r)
        for (Eigen::Index c = 0; c < e.cols(); ++c)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
    return m;
}

// Flip (u_r, v_r) pairs so the first nonzero entry of each u-column is
// non-negative. Fixes the sign ambiguity of the decomposition.
void apply_sign_convention(DenseMatrix& u, DenseMatrix& v) {
    for (std::size_t c = 0; c < u.cols; ++c) {
        double lead = 0.0;
        for (std::size_t r = 0; r < u.rows; ++r) {
            if (u(r, c) != 0.0) {
                lead = u(r, c);
                break;
            }
        }
        if (lead < 0.0) {
            for (std::size_t r = 0; r < u.rows; ++r) u(r, c) = -u(r, c);
            for (std::size_t r = 0; r < v.rows; ++r) v(r, c) = -v(r, c);
        }
    }
}

}  // namespace

SvdFactor decompose(const DenseMatrix& w, double tol) {
    if (w.rows == 0 || w.cols == 0) throw InvalidInput("svd: empty matrix");
    if (!w.all_finite()) throw InvalidInput("svd: non-finite input");

    const Eigen::MatrixXd e = to_eigen(w);

    // BDCSVD falls back to Jacobi below its blocking threshold; both are
    // deterministic for a fixed input and return non-increasing σ.
    Eigen::BDCSVD<Eigen::MatrixXd> solver(e, Eigen::ComputeThinU | Eigen::ComputeThinV);

    SvdFactor f;
    f.u = from_eigen(solver.matrixU());
    f.v = from_eigen(solver.matrixV());
    const auto& sv = solver.singularValues();
    f.sigma.assign(sv.data(), sv.data() + sv.size());

    apply_sign_convention(f.u, f.v);

    const double wn = frobenius_norm(w);
    const double err = frobenius_distance(reconstruct(f), w);
    if (err > tol * std::max(wn, 1e-300))
        throw InvalidInput("svd: reconstruction error above tolerance");
    return f;
}

std::size_t hard_threshold_rank(std::size_t d1, std::size_t d2) {
    if (d1 == 0 || d2 == 0) throw InvalidInput("hard_threshold_rank: zero dimension");
    return (d1 * d2) / (d1 + d2);
}

std::size_t clamped_rank(std::size_t d1, std::size_t d2, std::size_t min_rank) {
    return std::max(hard_threshold_rank(d1, d2), min_rank);
}

SvdFactor truncate(const SvdFactor& f, std::size_t k) {
    if (k < 1 || k > f.rank()) throw InvalidRank("truncate: rank out of [1, k]");
    SvdFactor t;
    t.sigma.assign(f.sigma.begin(), f.sigma.begin() + static_cast<std::ptrdiff_t>(k));
    t.u = DenseMatrix(f.u.rows, k);
    for (std::size_t r = 0; r < f.u.rows; ++r)
        for (std::size_t c = 0; c < k; ++c) t.u(r, c) = f.u(r, c);
    t.v = DenseMatrix(f.v.rows, k);
    for (std::size_t r = 0; r < f.v.rows; ++r)
        for (std::size_t c = 0; c < k; ++c) t.v(r, c) = f.v(r, c);
    return t;
}

MergedFactor merge_sigma_vt(const SvdFactor& f) {
    MergedFactor m;
    m.b = DenseMatrix(f.rank(), f.v.rows);
    for (std::size_t r = 0; r < f.rank(); ++r)
        for (std::size_t n = 0; n < f.v.rows; ++n) m.b(r, n) = f.sigma[r] * f.v(n, r);
    m.u = f.u;
    return m;
}

DenseMatrix reconstruct(const SvdFactor& f) {
    DenseMatrix out(f.u.rows, f.v.rows);
    for (std::size_t i = 0; i < f.u.rows; ++i)
        for (std::size_t r = 0; r < f.rank(); ++r) {
            const double us = f.u(i, r) * f.sigma[r];
            if (us == 0.0) continue;
            for (std::size_t j = 0; j < f.v.rows; ++j) out(i, j) += us * f.v(j, r);
        }
    return out;
}

double tail_energy(const std::vector<double>& sigma, std::size_t k) {
    double s = 0.0;
    for (std::size_t r = k; r < sigma.size(); ++r) s += sigma[r] * sigma[r];
    return std::sqrt(s);
}

}  // namespace hfpim::svd
