#pragma once

#include <vector>

#include "phaselab/wavelet/filters.hpp"

namespace phaselab::wavelet {

// phi and psi sampled at k/2^level over the support [0, taps-1].
struct ScalingSamples {
    int level = 0;
    std::vector<double> phi;  // phi[k] = phi(k / 2^level), k = 0 .. (taps-1)*2^level
    std::vector<double> psi;

    double step() const { return 1.0 / double(std::size_t{1} << level); }
    std::size_t count() const { return phi.size(); }
};

// Exact dyadic refinement: values at the integers come from the eigenvector
// of the refinement matrix, finer levels from repeated application of the
// two-scale relation. Requires level >= 1.
ScalingSamples cascade_eval(const FilterPair& filters, int level);

// Evaluates sum_k phi(x - k) on the sample grid (partition-of-unity check).
std::vector<double> partition_of_unity(const ScalingSamples& s);

}  // namespace phaselab::wavelet
