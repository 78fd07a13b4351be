#include "phaselab/wavelet/filters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "phaselab/errors.hpp"

namespace phaselab::wavelet {

namespace {

using cplx = std::complex<double>;

// Multiply polynomial (ascending coefficients) by (z - root).
std::vector<cplx> mul_linear(const std::vector<cplx>& poly, cplx root) {
    std::vector<cplx> out(poly.size() + 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < poly.size(); ++i) {
        out[i + 1] += poly[i];
        out[i] -= root * poly[i];
    }
    return out;
}

cplx poly_eval(const std::vector<cplx>& poly, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
    return acc;
}

// Roots via the companion matrix, then a few Newton steps on the exact
// coefficients to tighten them.
std::vector<cplx> poly_roots(const std::vector<double>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg < 1) return {};

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
    std::vector<cplx> roots(deg);
    std::vector<cplx> poly(coeffs.begin(), coeffs.begin() + deg + 1);
    std::vector<cplx> dpoly(deg);
    for (int i = 1; i <= deg; ++i) dpoly[i - 1] = poly[i] * double(i);

    for (int i = 0; i < deg; ++i) {
        cplx z = es.eigenvalues()[i];
        for (int it = 0; it < 6; ++it) {
            cplx d = poly_eval(dpoly, z);
            if (std::abs(d) == 0.0) break;
            z -= poly_eval(poly, z) / d;
        }
        roots[i] = z;
    }
    return roots;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

// Build taps from a root subset of the half-band factor plus the p-fold zero
// at z = -1; scaled so that H(1) = sqrt(2).
std::vector<double> taps_from_roots(int p, const std::vector<cplx>& q_roots) {
    std::vector<cplx> poly{cplx{1.0, 0.0}};
    for (int i = 0; i < p; ++i) poly = mul_linear(poly, cplx{-1.0, 0.0});
    for (const cplx& r : q_roots) poly = mul_linear(poly, r);

    cplx at_one = poly_eval(poly, cplx{1.0, 0.0});
    double scale = std::numbers::sqrt2 / at_one.real();
    std::vector<double> h(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) h[i] = poly[i].real() * scale;
    return h;
}

// Residuals of the defining system: p orthonormality equations
// sum_k h_k h_{k+2m} = delta_m and p moment equations on the mirror filter.
// Raw-power moment rows at order >= 8 cannot be evaluated below ~1e-9 in
// double, so those rows switch to moments about the filter center (an
// equivalent spanning set). Newton drives the spectral-factorization seed
// down to the evaluation floor of each row.
void newton_polish(std::vector<double>& h, int p) {
    const int n = 2 * p;
    const double c = 0.5 * double(n - 1);
    // A raw-power row can be evaluated to ~1e-11 only while (2p-1)^j stays
    // below ~9e4/eps; beyond that the row uses the centered moment.
    auto origin = [&](int j) {
        return std::pow(double(n - 1), j) <= 9e4 ? 0.0 : c;
    };

    auto residual = [&](const std::vector<double>& v, Eigen::VectorXd& F) {
        for (int m = 0; m < p; ++m) {
            double s = 0.0;
            for (int k = 0; k + 2 * m < n; ++k) s += v[k] * v[k + 2 * m];
            F[m] = s - (m == 0 ? 1.0 : 0.0);
        }
        for (int j = 0; j < p; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                double g = (k % 2 == 0 ? 1.0 : -1.0) * v[n - 1 - k];
                s += g * std::pow(double(k) - origin(j), j);
            }
            F[p + j] = s;
        }
    };

    Eigen::VectorXd F(n), Fs(n), step(n);
    Eigen::MatrixXd J(n, n);
    Eigen::VectorXd row_scale(n);
    std::vector<double> best = h;
    double best_norm = std::numeric_limits<double>::infinity();

    for (int it = 0; it < 40; ++it) {
        residual(h, F);
        for (int m = 0; m < p; ++m) {
            for (int a = 0; a < n; ++a) {
                double d = 0.0;
                if (a + 2 * m < n) d += h[a + 2 * m];
                if (a - 2 * m >= 0) d += h[a - 2 * m];
                J(m, a) = d;
            }
        }
        for (int j = 0; j < p; ++j) {
            for (int a = 0; a < n; ++a) {
                int k = n - 1 - a;
                J(p + j, a) = (k % 2 == 0 ? 1.0 : -1.0) * std::pow(double(k) - origin(j), j);
            }
        }
        // equilibrate: moment rows grow like k^j and would swamp the pivoting
        for (int r = 0; r < n; ++r) {
            row_scale[r] = std::max(J.row(r).cwiseAbs().maxCoeff(), 1e-300);
            J.row(r) /= row_scale[r];
            Fs[r] = F[r] / row_scale[r];
        }
        // every row is conditioned to be drivable below 1e-11 unscaled
        double norm = F.lpNorm<Eigen::Infinity>();
        if (norm < best_norm) {
            best_norm = norm;
            best = h;
        }
        if (norm < 1e-15) break;
        step = J.fullPivLu().solve(Fs);
        for (int a = 0; a < n; ++a) h[a] -= step[a];
    }
    h = best;
}

// Phase-nonlinearity score used for the symmlet root selection: deviation of
// the filter phase from linear phase, sampled over (0, pi).
double phase_score(const std::vector<double>& h) {
    const int samples = 128;
    const double tau = 0.5 * double(h.size() - 1);
    double score = 0.0;
    double prev = 0.0, offset = 0.0;
    for (int s = 1; s < samples; ++s) {
        double w = std::numbers::pi * double(s) / double(samples);
        cplx H{0.0, 0.0};
        for (std::size_t k = 0; k < h.size(); ++k) H += h[k] * std::exp(cplx{0.0, -w * double(k)});
        if (std::abs(H) < 1e-9) continue;
        double ph = std::arg(H) + offset;
        while (ph - prev > std::numbers::pi) { ph -= 2 * std::numbers::pi; offset -= 2 * std::numbers::pi; }
        while (ph - prev < -std::numbers::pi) { ph += 2 * std::numbers::pi; offset += 2 * std::numbers::pi; }
        double dev = ph + tau * w;
        score += dev * dev;
        prev = ph;
    }
    return score;
}

std::vector<double> construct(Family family, int p) {
    if (family == Family::haar || p == 1) {
        return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
    }

    // Half-band polynomial P(y) = sum_{k<p} C(p-1+k,k) y^k expressed in z
    // through y = (2 - z - 1/z)/4, cleared to a degree 2(p-1) polynomial.
    const int m = p - 1;
    std::vector<double> B(2 * m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        double c = binomial(m + k, k) / std::pow(4.0, k);
        // (2 - z - 1/z)^k * z^m  ->  z^{m-k} * (-(z^2) + 2z - 1)^k, sign folded in
        std::vector<double> t(2 * k + 1, 0.0);
        t[0] = 1.0;
        for (int rep = 0; rep < k; ++rep) {
            std::vector<double> nt(2 * k + 1, 0.0);
            for (int i = 0; i <= 2 * k; ++i) {
                if (t[i] == 0.0) continue;
                if (i + 2 <= 2 * k) nt[i + 2] -= t[i];
                if (i + 1 <= 2 * k) nt[i + 1] += 2.0 * t[i];
                nt[i] -= t[i];
            }
            t = nt;
        }
        for (int i = 0; i <= 2 * k; ++i) B[m - k + i] += c * t[i];
    }

    std::vector<cplx> roots = poly_roots(B);

    // Partition into reciprocal pairs; complex pairs carry their conjugates.
    std::vector<std::vector<cplx>> groups;  // each group: the |z|<1 representatives
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i] || std::abs(roots[i]) >= 1.0) continue;
        used[i] = true;
        if (std::abs(roots[i].imag()) < 1e-10) {
            groups.push_back({cplx{roots[i].real(), 0.0}});
        } else {
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (!used[j] && std::abs(roots[j] - std::conj(roots[i])) < 1e-6) {
                    used[j] = true;
                    break;
                }
            }
            groups.push_back({roots[i], std::conj(roots[i])});
        }
    }

    auto assemble = [&](unsigned mask) {
        std::vector<cplx> sel;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            for (const cplx& r : groups[gi]) {
                sel.push_back((mask >> gi) & 1u ? 1.0 / r : r);
            }
        }
        return taps_from_roots(p, sel);
    };

    std::vector<double> h;
    if (family == Family::daubechies) {
        h = assemble(0);  // extremal phase: all roots inside the unit circle
    } else {
        double best = std::numeric_limits<double>::infinity();
        for (unsigned mask = 0; mask < (1u << groups.size()); ++mask) {
            std::vector<double> cand = assemble(mask);
            double s = phase_score(cand);
            if (s < best) {
                best = s;
                h = cand;
            }
        }
    }

    // orient with the energy front-loaded, the classic tabulated convention
    double centroid = 0.0, energy = 0.0;
    for (int k = 0; k < 2 * p; ++k) {
        centroid += k * h[k] * h[k];
        energy += h[k] * h[k];
    }
    if (centroid / energy > 0.5 * double(2 * p - 1)) std::reverse(h.begin(), h.end());

    newton_polish(h, p);
    return h;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::haar: return "haar";
        case Family::daubechies: return "daubechies";
        case Family::symmlet: return "symmlet";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "haar") return Family::haar;
    if (name == "daubechies" || name == "db") return Family::daubechies;
    if (name == "symmlet" || name == "sym") return Family::symmlet;
    throw ValidationError("unknown wavelet family '" + name + "'");
}

FilterPair build_filter_pair(Family family, int order) {
    if (family == Family::haar) order = 1;
    if (order < 1 || order > 10) {
        throw UnsupportedOrder(family_name(family) + " order " + std::to_string(order) +
                               " outside supported range 1..10");
    }
    if (family != Family::haar && order == 1) family = Family::haar;

    static std::mutex mu;
    static std::map<std::pair<Family, int>, FilterPair> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find({family, order});
        if (it != cache.end()) return it->second;
    }

    FilterPair fp;
    fp.family = family;
    fp.vanishing_moments = order;
    fp.lowpass = construct(family, order);
    const int n = fp.taps();
    fp.highpass.resize(n);
    for (int k = 0; k < n; ++k) {
        fp.highpass[k] = (k % 2 == 0 ? 1.0 : -1.0) * fp.lowpass[n - 1 - k];
    }

    std::scoped_lock lock(mu);
    cache.emplace(std::make_pair(family, order), fp);
    return fp;
}

std::string export_filter_text(const FilterPair& f) {
    std::ostringstream os;
    os.precision(17);
    os << "# " << family_name(f.family) << " " << f.vanishing_moments << " " << f.taps() << "\n";
    for (double v : f.lowpass) os << v << "\n";
    return os.str();
}

}  // namespace phaselab::wavelet
