// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_ROOT_FIND_HPP
#define MCFTTDL_ROOT_FIND_HPP

#include <functional>
#include <optional>
#include <utility>

namespace mcfttdl {

struct RootOptions {
    double x_tol = 1e-15;   // absolute tolerance on the abscissa
    int max_iter = 200;
};

// Brent-style root of f on [a, b].  f(a) and f(b) must have opposite signs,
// otherwise a ValidationError is thrown.  Combines bisection with secant /
// inverse quadratic steps; always converges for a genuine bracket.
double find_root(const std::function<double(double)>& f, double a, double b,
                 const RootOptions& opts = {});

// Scan [lo, hi] on n+1 equally spaced points and return the first
// subinterval over which f changes sign.  Characteristic functions of
// layered waveguide problems oscillate near cutoff, so roots are located
// on a grid before refinement.  With from_high the scan walks downward
// from hi, which finds the fundamental mode first.
std::optional<std::pair<double, double>>
scan_bracket(const std::function<double(double)>& f, double lo, double hi,
             int n, bool from_high = false);

}

#endif
