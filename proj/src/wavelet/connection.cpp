#include "phaselab/wavelet/connection.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "phaselab/errors.hpp"
#include "phaselab/util.hpp"

namespace phaselab::wavelet {

ConnectionCoefficients connection_coeffs(const FilterPair& f, int n) {
    if (n < 1) throw std::invalid_argument("derivative order must be >= 1");
    if (f.vanishing_moments < n + 1) {
        throw InsufficientSmoothness(family_name(f.family) + "-" +
                                     std::to_string(f.vanishing_moments) +
                                     " lacks the smoothness for derivative order " +
                                     std::to_string(n));
    }

    const int p = f.vanishing_moments;
    const int L = 2 * p - 2;        // r_l support: |l| <= L
    const int dim = 2 * L + 1;
    const int ntaps = f.taps();

    // Filter autocorrelation A_m; even lags vanish by orthonormality.
    std::vector<double> A(std::size_t(2 * ntaps - 1), 0.0);
    for (int m = -(ntaps - 1); m <= ntaps - 1; ++m) {
        double s = 0.0;
        for (int k = 0; k < ntaps; ++k) {
            int km = k + m;
            if (km >= 0 && km < ntaps) s += f.lowpass[k] * f.lowpass[km];
        }
        A[std::size_t(m + ntaps - 1)] = s;
    }

    // Homogeneous system (I - 2^n T) r = 0 with T r|_l = sum_m A_m r_{2l+m};
    // one row is replaced by the moment normalization.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (int l = -L; l <= L; ++l) {
        int row = l + L;
        M(row, row) += 1.0;
        for (int m = -(ntaps - 1); m <= ntaps - 1; ++m) {
            int idx = 2 * l + m;
            if (idx < -L || idx > L) continue;
            M(row, idx + L) -= std::pow(2.0, n) * A[std::size_t(m + ntaps - 1)];
        }
    }
    Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);

    // Normalization row: sum_l l^n r_l = (-1)^n n!
    int replace = L;  // the l = 0 equation, which the symmetry makes redundant
    for (int l = -L; l <= L; ++l) M(replace, l + L) = std::pow(double(l), n);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= double(i);
    b[replace] = (n % 2 == 0 ? fact : -fact);

    Eigen::VectorXd r = M.fullPivLu().solve(b);

    ConnectionCoefficients cc;
    cc.derivative_order = n;
    cc.max_shift = L;
    cc.r.assign(r.data(), r.data() + dim);
    return cc;
}

std::vector<double> apply_stencil(const ConnectionCoefficients& cc, const std::vector<double>& f,
                                  double spacing) {
    const std::ptrdiff_t n = std::ptrdiff_t(f.size());
    const double scale = 1.0 / std::pow(spacing, cc.derivative_order);
    std::vector<double> out(f.size(), 0.0);
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int l = -cc.max_shift; l <= cc.max_shift; ++l) {
            acc += cc.at(l) * f[std::size_t(wrap(k - l, n))];
        }
        out[std::size_t(k)] = acc * scale;
    }
    return out;
}

}  // namespace phaselab::wavelet
