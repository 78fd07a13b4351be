#pragma once

#include <string>
#include <vector>

namespace phaselab::wavelet {

enum class Family { haar, daubechies, symmlet };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Orthonormal two-channel filter bank. lowpass holds the scaling taps h_k,
// highpass the quadrature-mirror taps g_k = (-1)^k h_{L-1-k}.
struct FilterPair {
    std::vector<double> lowpass;
    std::vector<double> highpass;
    int vanishing_moments = 0;
    Family family = Family::haar;

    int taps() const { return static_cast<int>(lowpass.size()); }
    // Support of the scaling function is [0, taps-1].
    int support_end() const { return taps() - 1; }
};

// Constructs the filter for (family, order) by spectral factorization of the
// Daubechies half-band polynomial, followed by a Newton polish of the
// orthonormality + vanishing-moment system so the invariants hold to ~1e-15.
// Results are cached; repeated calls are cheap and thread-safe.
//
// order = number of vanishing moments p (2p taps); supported 1..10 for
// daubechies and symmlet, ignored for haar. Throws UnsupportedOrder otherwise.
FilterPair build_filter_pair(Family family, int order);

// Plain-text export, one tap per line, header "# family order ntaps".
std::string export_filter_text(const FilterPair& f);

}  // namespace phaselab::wavelet
