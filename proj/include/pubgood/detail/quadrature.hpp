#pragma once

#include <cmath>
#include <functional>

namespace pubgood::detail {

// Adaptive Simpson with absolute tolerance, recursion-depth capped.
inline double simpson_step(const std::function<double(double)>& f, double a, double b,
                           double fa, double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 48) {
    if (!(a < b)) return 0.0;
    // Split into a few panels up front so narrow features are not missed by
    // the very first Simpson estimate.
    const int panels = 8;
    double h = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * h, hi = lo + h;
        double mid = 0.5 * (lo + hi);
        double flo = f(lo), fmid = f(mid), fhi = f(hi);
        double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol / panels, max_depth);
    }
    return total;
}

// Golden-section search for the maximum of a unimodal f on [a,b].
inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-12) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace pubgood::detail
