#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracles {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("bisect: no bracket");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double bound_state_q(double V0, double a) {
    const auto g = [&](double q) {
        return std::sqrt(V0 - q * q) * std::sin(q * a) + q * std::cos(q * a);
    };
    return bisect(g, 0.5 * 3.14159265358979 / a + 1e-9, std::sqrt(V0) - 1e-12);
}

double virtual_state_q(double V0, double a) {
    const auto g = [&](double q) {
        return std::sqrt(V0 - q * q) * std::sin(q * a) - q * std::cos(q * a);
    };
    // bracket between the last real crossing and the top of the well
    double lo = 0.75 * std::sqrt(V0), hi = std::sqrt(V0) - 1e-12;
    while (g(lo) * g(hi) > 0.0 && lo > 1e-6) lo *= 0.95;
    return bisect(g, lo, hi);
}

double series_cos(double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 60; ++n) {
        term *= -x * x / ((2.0 * n - 1.0) * (2.0 * n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double series_sin(double x) {
    double term = x, sum = x;
    for (int n = 1; n < 60; ++n) {
        term *= -x * x / ((2.0 * n) * (2.0 * n + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

std::vector<cplx> scan_zeros(const std::function<cplx(cplx)>& f, double re_lo,
                             double re_hi, double im_lo, double im_hi, int n_re,
                             int n_im) {
    std::vector<cplx> zeros;
    const double dre = (re_hi - re_lo) / n_re, dim = (im_hi - im_lo) / n_im;

    std::vector<std::vector<double>> mag(n_im + 1, std::vector<double>(n_re + 1));
    for (int i = 0; i <= n_im; ++i)
        for (int j = 0; j <= n_re; ++j)
            mag[i][j] = std::abs(f({re_lo + dre * j, im_lo + dim * i}));

    for (int i = 1; i < n_im; ++i) {
        for (int j = 1; j < n_re; ++j) {
            const double m = mag[i][j];
            if (m > 0.5) continue;
            if (m >= mag[i - 1][j] || m >= mag[i + 1][j] || m >= mag[i][j - 1] ||
                m >= mag[i][j + 1])
                continue;
            // finite-difference Newton from the lattice minimum
            cplx k{re_lo + dre * j, im_lo + dim * i};
            bool ok = false;
            for (int it = 0; it < 80; ++it) {
                const double h = 1e-7 * (1.0 + std::abs(k));
                const cplx d = (f(k + h) - f(k - h)) / (2.0 * h);
                if (!(std::abs(d) > 0.0)) break;
                const cplx step = f(k) / d;
                k -= step;
                if (std::abs(step) < 1e-13 * (1.0 + std::abs(k))) {
                    ok = true;
                    break;
                }
            }
            if (!ok || std::abs(f(k)) > 1e-9) continue;
            if (k.real() < re_lo || k.real() > re_hi || k.imag() < im_lo ||
                k.imag() > im_hi)
                continue;
            bool dup = false;
            for (const cplx& z : zeros)
                if (std::abs(z - k) < 1e-6 * (1.0 + std::abs(k))) dup = true;
            if (!dup) zeros.push_back(k);
        }
    }
    return zeros;
}

unsigned long long dfac_product(int l) {
    unsigned long long acc = 1;
    for (int m = 1; m <= 2 * l + 1; m += 2) acc *= static_cast<unsigned long long>(m);
    return acc;
}

}  // namespace oracles
