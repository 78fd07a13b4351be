#include "phaselab/wavelet/cascade.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaselab/errors.hpp"

namespace phaselab::wavelet {

namespace {

// phi at the integers 0..N-1 solves phi(i) = sqrt(2) sum_k h_k phi(2i-k),
// i.e. the eigenvector of M_{ij} = sqrt(2) h_{2i-j} for eigenvalue 1,
// normalized so sum_i phi(i) = 1.
std::vector<double> values_at_integers(const FilterPair& f) {
    const int n = f.taps();
    if (n == 2) return {1.0, 0.0};  // haar: indicator of [0,1)

    const int dim = n;  // integer points 0..n-1; endpoints come out zero
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            int k = 2 * i - j;
            if (k >= 0 && k < n) M(i, j) = std::numbers::sqrt2 * f.lowpass[k];
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim; ++i) {
        double d = std::abs(es.eigenvalues()[i] - std::complex<double>{1.0, 0.0});
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    Eigen::VectorXd v = es.eigenvectors().col(best).real();
    double s = v.sum();
    if (std::abs(s) < 1e-12) throw std::runtime_error("degenerate refinement eigenvector");
    std::vector<double> phi(dim);
    for (int i = 0; i < dim; ++i) phi[i] = v[i] / s;
    return phi;
}

}  // namespace

ScalingSamples cascade_eval(const FilterPair& f, int level) {
    if (level < 1) throw std::invalid_argument("cascade_eval: level must be >= 1");
    const int support = f.support_end();

    // Level 0 values at integers, then refine one dyadic level at a time:
    // phi(m/2^{j+1}) = sqrt(2) sum_k h_k phi(m/2^j - k).
    std::vector<double> cur = values_at_integers(f);
    cur.resize(std::size_t(support) + 1);  // include the right endpoint (zero for p>=2)
    if (f.taps() == 2) cur = {1.0, 0.0};

    for (int j = 0; j < level; ++j) {
        const std::ptrdiff_t stride = std::ptrdiff_t{1} << j;  // index step of one unit shift at level j
        std::vector<double> next(std::size_t(support) * (std::size_t{2} << j) + 1, 0.0);
        for (std::size_t m = 0; m < next.size(); ++m) {
            // argument 2x - k at resolution 2^-j has index m - k*2^j
            double acc = 0.0;
            for (int k = 0; k < f.taps(); ++k) {
                std::ptrdiff_t idx = std::ptrdiff_t(m) - std::ptrdiff_t(k) * stride;
                if (idx >= 0 && idx < std::ptrdiff_t(cur.size())) acc += f.lowpass[k] * cur[idx];
            }
            next[m] = std::numbers::sqrt2 * acc;
        }
        cur = std::move(next);
    }

    ScalingSamples out;
    out.level = level;
    out.phi = cur;
    out.psi.assign(cur.size(), 0.0);
    const std::ptrdiff_t stride = std::ptrdiff_t{1} << level;
    for (std::size_t m = 0; m < out.psi.size(); ++m) {
        double acc = 0.0;
        for (int k = 0; k < f.taps(); ++k) {
            std::ptrdiff_t idx = 2 * std::ptrdiff_t(m) - std::ptrdiff_t(k) * stride;
            if (idx >= 0 && idx < std::ptrdiff_t(out.phi.size())) acc += f.highpass[k] * out.phi[idx];
        }
        out.psi[m] = std::numbers::sqrt2 * acc;
    }
    return out;
}

std::vector<double> partition_of_unity(const ScalingSamples& s) {
    const std::size_t per_unit = std::size_t{1} << s.level;
    std::vector<double> sums(per_unit, 0.0);
    for (std::size_t m = 0; m < s.phi.size(); ++m) sums[m % per_unit] += s.phi[m];
    return sums;
}

}  // namespace phaselab::wavelet
