#pragma once

#include <vector>

#include "phaselab/wavelet/filters.hpp"

namespace phaselab::wavelet {

// Stencil weights r_l = <phi(. - l), d^n/dx^n phi> expressing the n-th
// derivative in the scaling basis. Support is |l| <= 2p-2; for odd n the
// weights are antisymmetric, for even n symmetric.
struct ConnectionCoefficients {
    int derivative_order = 1;
    int max_shift = 0;
    std::vector<double> r;  // r[l + max_shift], l = -max_shift .. max_shift

    double at(int ell) const {
        if (ell < -max_shift || ell > max_shift) return 0.0;
        return r[std::size_t(ell + max_shift)];
    }
};

// Solves the refinement-induced linear system
//   r_l = 2^n sum_m A_m r_{2l+m},   A_m = sum_k h_k h_{k+m},
// with the rank-one deficiency closed by the polynomial-exactness row
// sum_l l^n r_l = (-1)^n n!, so degree-n monomials differentiate exactly.
// Requires vanishing_moments >= n+1 (throws InsufficientSmoothness).
ConnectionCoefficients connection_coeffs(const FilterPair& filters, int derivative_order);

// Applies the stencil periodically, scaled by the grid spacing:
// out_k = (1/h^n) sum_l r_l f_{k-l}.
std::vector<double> apply_stencil(const ConnectionCoefficients& cc, const std::vector<double>& f,
                                  double spacing);

}  // namespace phaselab::wavelet
