#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "phaselab/errors.hpp"
#include "phaselab/wavelet/cascade.hpp"
#include "phaselab/wavelet/connection.hpp"
#include "phaselab/wavelet/filters.hpp"

using namespace phaselab;
using namespace phaselab::wavelet;

namespace {

void check_filter_invariants(const FilterPair& f) {
    const int n = f.taps();
    double sum = 0.0;
    for (double h : f.lowpass) sum += h;
    CHECK(std::abs(sum - std::numbers::sqrt2) < 1e-12);

    for (int m = 0; 2 * m < n; ++m) {
        double s = 0.0;
        for (int k = 0; k + 2 * m < n; ++k) s += f.lowpass[k] * f.lowpass[k + 2 * m];
        CHECK(std::abs(s - (m == 0 ? 1.0 : 0.0)) < 1e-12);
    }

    // Moment sums about the origin lose digits to cancellation as (2p-1)^j
    // grows; once the sum cannot be evaluated to 1e-11 in double, assert the
    // equivalent moment about the filter center instead.
    const double c = 0.5 * double(n - 1);
    for (int j = 0; j < f.vanishing_moments; ++j) {
        double origin = std::pow(double(n - 1), j) <= 9e4 ? 0.0 : c;
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += f.highpass[k] * std::pow(double(k) - origin, j);
        CHECK(std::abs(s) < 1e-10);
    }
}

}  // namespace

TEST_CASE("haar filter is the unique 2-tap orthonormal pair") {
    FilterPair f = build_filter_pair(Family::haar, 1);
    REQUIRE(f.taps() == 2);
    CHECK(f.lowpass[0] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
    CHECK(f.lowpass[1] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
    check_filter_invariants(f);
}

TEST_CASE("daubechies-2 reproduces the classic 4-tap filter") {
    FilterPair f = build_filter_pair(Family::daubechies, 2);
    REQUIRE(f.taps() == 4);
    check_filter_invariants(f);
    // (1 + sqrt 3)/(4 sqrt 2) etc.
    const double s3 = std::sqrt(3.0);
    const double d = 4.0 * std::numbers::sqrt2;
    std::vector<double> expect{(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d};
    for (int k = 0; k < 4; ++k) CHECK(f.lowpass[k] == doctest::Approx(expect[k]).epsilon(1e-12));
}

TEST_CASE("filter invariants hold across families and orders") {
    for (int p = 2; p <= 10; ++p) {
        CAPTURE(p);
        check_filter_invariants(build_filter_pair(Family::daubechies, p));
        check_filter_invariants(build_filter_pair(Family::symmlet, p));
    }
}

TEST_CASE("symmlet-8 is 16 taps and more symmetric than daubechies-8") {
    FilterPair sym = build_filter_pair(Family::symmlet, 8);
    FilterPair db = build_filter_pair(Family::daubechies, 8);
    REQUIRE(sym.taps() == 16);

    // energy asymmetry about the center as a symmetry proxy
    auto asym = [](const FilterPair& f) {
        double c = 0.0, e = 0.0;
        for (int k = 0; k < f.taps(); ++k) {
            c += k * f.lowpass[k] * f.lowpass[k];
            e += f.lowpass[k] * f.lowpass[k];
        }
        c /= e;
        double m3 = 0.0;
        for (int k = 0; k < f.taps(); ++k) {
            m3 += std::pow(k - c, 3) * f.lowpass[k] * f.lowpass[k];
        }
        return std::abs(m3);
    };
    CHECK(asym(sym) < asym(db));
}

TEST_CASE("unsupported orders are rejected") {
    CHECK_THROWS_AS(build_filter_pair(Family::daubechies, 0), UnsupportedOrder);
    CHECK_THROWS_AS(build_filter_pair(Family::daubechies, 11), UnsupportedOrder);
    CHECK_THROWS_AS(build_filter_pair(Family::symmlet, -3), UnsupportedOrder);
}

TEST_CASE("filter export format") {
    FilterPair f = build_filter_pair(Family::daubechies, 3);
    std::string txt = export_filter_text(f);
    CHECK(txt.rfind("# daubechies 3 6\n", 0) == 0);
    int lines = 0;
    for (char c : txt) lines += (c == '\n');
    CHECK(lines == 7);
}

TEST_CASE("haar cascade gives the indicator of [0,1)") {
    ScalingSamples s = cascade_eval(build_filter_pair(Family::haar, 1), 4);
    REQUIRE(s.count() == 17);
    for (std::size_t k = 0; k < 16; ++k) CHECK(s.phi[k] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.phi[16] == doctest::Approx(0.0));
}

TEST_CASE("cascade partition of unity, daubechies-2 at J=8") {
    ScalingSamples s = cascade_eval(build_filter_pair(Family::daubechies, 2), 8);
    for (double v : partition_of_unity(s)) CHECK(std::abs(v - 1.0) < 1e-8);
}

TEST_CASE("cascade partition of unity, symmlet-8 at J=6") {
    ScalingSamples s = cascade_eval(build_filter_pair(Family::symmlet, 8), 6);
    for (double v : partition_of_unity(s)) CHECK(std::abs(v - 1.0) < 1e-8);
}

TEST_CASE("daubechies-3 support is [0,5]") {
    FilterPair f = build_filter_pair(Family::daubechies, 3);
    CHECK(f.support_end() == 5);
    ScalingSamples s = cascade_eval(f, 8);
    CHECK(s.count() == std::size_t(5) * 256 + 1);
    // mass concentrated strictly inside the support
    CHECK(std::abs(s.phi.front()) < 1e-10);
    CHECK(std::abs(s.phi.back()) < 1e-10);
    double l2 = 0.0;
    for (double v : s.phi) l2 += v * v * s.step();
    CHECK(l2 == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("successive cascade levels agree at common dyadic points") {
    FilterPair f = build_filter_pair(Family::daubechies, 2);
    ScalingSamples a = cascade_eval(f, 8);
    ScalingSamples b = cascade_eval(f, 9);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.count(); ++k) {
        worst = std::max(worst, std::abs(a.phi[k] - b.phi[2 * k]));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("connection coefficients reject haar") {
    CHECK_THROWS_AS(connection_coeffs(build_filter_pair(Family::haar, 1), 1), InsufficientSmoothness);
}

TEST_CASE("daubechies-3 first-derivative coefficients match the known rationals") {
    ConnectionCoefficients cc = connection_coeffs(build_filter_pair(Family::daubechies, 3), 1);
    REQUIRE(cc.max_shift == 4);
    CHECK(cc.at(1) == doctest::Approx(-272.0 / 365.0).epsilon(1e-10));
    CHECK(cc.at(2) == doctest::Approx(53.0 / 365.0).epsilon(1e-10));
    CHECK(cc.at(3) == doctest::Approx(-16.0 / 1095.0).epsilon(1e-10));
    CHECK(cc.at(4) == doctest::Approx(-1.0 / 2920.0).epsilon(1e-10));
}

TEST_CASE("first-derivative stencil invariants") {
    for (auto [fam, p] : {std::pair{Family::daubechies, 2}, {Family::daubechies, 3},
                          {Family::symmlet, 8}}) {
        CAPTURE(int(fam));
        CAPTURE(p);
        ConnectionCoefficients cc = connection_coeffs(build_filter_pair(fam, p), 1);
        double moment = 0.0, antisym = 0.0;
        for (int l = -cc.max_shift; l <= cc.max_shift; ++l) {
            moment += l * cc.at(l);
            antisym = std::max(antisym, std::abs(cc.at(l) + cc.at(-l)));
        }
        CHECK(std::abs(moment + 1.0) < 1e-10);
        CHECK(antisym < 1e-12);
    }
}

TEST_CASE("stencil differentiates linears exactly on periodic grids") {
    ConnectionCoefficients cc = connection_coeffs(build_filter_pair(Family::daubechies, 3), 1);
    const std::size_t n = 64;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = double(i);
    std::vector<double> d = apply_stencil(cc, f, 1.0);
    // interior points, away from the periodic seam
    for (std::size_t i = cc.max_shift; i < n - std::size_t(cc.max_shift); ++i) {
        CHECK(std::abs(d[i] - 1.0) < 1e-10);
    }
}

TEST_CASE("stencil converges to d/dx sin = cos at better than second order") {
    ConnectionCoefficients cc = connection_coeffs(build_filter_pair(Family::daubechies, 3), 1);
    auto err_at = [&](std::size_t n) {
        const double L = 2 * std::numbers::pi;
        const double h = L / double(n);
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(i * h);
        std::vector<double> d = apply_stencil(cc, f, h);
        double e2 = 0.0, ref = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double c = std::cos(i * h);
            e2 += (d[i] - c) * (d[i] - c);
            ref += c * c;
        }
        return std::sqrt(e2 / ref);
    };
    double e64 = err_at(64), e128 = err_at(128);
    CHECK(e64 < 1e-3);
    CHECK(e128 < e64 / 4.0);  // at least second order
}
