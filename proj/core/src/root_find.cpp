// SPDX-License-Identifier: Apache-2.0
#include "mcfttdl/root_find.hpp"

#include <cmath>
#include <limits>

#include "mcfttdl/errors.hpp"

namespace mcfttdl {

double find_root(const std::function<double(double)>& f, double a, double b,
                 const RootOptions& opts) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw ValidationError("find_root: interval does not bracket a root");

    // c tracks the previous best bracket endpoint.
    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * opts.x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Secant, or inverse quadratic when three points are distinct.
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm; e = d;   // interpolation unacceptable, bisect
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::abs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw ConvergenceError("find_root: no convergence after max_iter steps");
}

std::optional<std::pair<double, double>>
scan_bracket(const std::function<double(double)>& f, double lo, double hi,
             int n, bool from_high) {
    if (n < 1 || !(hi > lo))
        throw ValidationError("scan_bracket: need hi > lo and n >= 1");
    const double h = (hi - lo) / n;
    auto node = [&](int i) { return from_high ? hi - i * h : lo + i * h; };
    double x0 = node(0);
    double f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = node(i);
        const double f1 = f(x1);
        if (f0 == 0.0) return std::make_pair(x0, x0);
        if ((f0 > 0.0) != (f1 > 0.0)) {
            if (from_high) return std::make_pair(x1, x0);
            return std::make_pair(x0, x1);
        }
        x0 = x1;
        f0 = f1;
    }
    return std::nullopt;
}

}
